#include "shelfhom/tools/io.hpp"

#include <fstream>
#include <sstream>

namespace shelfhom::tools {

ShelfDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

ShelfDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("shelf document must be a JSON object");
  if (!j.contains("size") || !j["size"].is_number_unsigned())
    throw ParseError("shelf document needs a positive integer \"size\"");
  if (!j.contains("ops") || !j["ops"].is_array() || j["ops"].empty())
    throw ParseError("shelf document needs a nonempty \"ops\" array");
  ShelfDocument doc;
  doc.size = j["size"].get<std::size_t>();
  if (doc.size == 0) throw ParseError("\"size\" must be positive");
  for (const auto& op : j["ops"]) {
    if (!op.is_array() || op.size() != doc.size)
      throw ParseError("every op must be an array of " + std::to_string(doc.size) + " rows");
    std::vector<Element> flat;
    for (const auto& row : op) {
      if (!row.is_array() || row.size() != doc.size)
        throw ParseError("every row must have " + std::to_string(doc.size) + " entries");
      for (const auto& v : row) {
        if (!v.is_number_integer() || v.get<long long>() < 0 ||
            v.get<long long>() >= static_cast<long long>(doc.size))
          throw ParseError("table entries must be integers in 0.." +
                           std::to_string(doc.size - 1));
        flat.push_back(v.get<Element>());
      }
    }
    doc.ops.emplace_back(doc.size, std::move(flat));
  }
  if (j.contains("labels")) {
    const auto& labels = j["labels"];
    if (!labels.is_array() || labels.size() != doc.size)
      throw ParseError("\"labels\" must list one string per element");
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      doc.labels.push_back(l.get<std::string>());
    }
  }
  return doc;
}

json table_to_json(const BinaryOpTable& t) {
  json rows = json::array();
  for (Element x = 0; x < t.size(); ++x) {
    auto r = t.row(x);
    rows.push_back(std::vector<Element>(r.begin(), r.end()));
  }
  return rows;
}

json to_json(const ShelfDocument& doc) {
  json j;
  j["size"] = doc.size;
  j["ops"] = json::array();
  for (const auto& op : doc.ops) j["ops"].push_back(table_to_json(op));
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j;
}

json key_to_json(const IsoClassKey& key) {
  auto f = key.table.flat();
  return std::vector<Element>(f.begin(), f.end());
}

json group_to_json(const HomologyGroup& h) {
  json torsion = json::array();
  // Invariant factors can exceed 64 bits; small ones stay numbers for readability.
  for (const auto& t : h.torsion) {
    if (t.fits_slong_p()) torsion.push_back(t.get_si());
    else torsion.push_back(t.get_str());
  }
  return {{"degree", h.degree}, {"rank", h.rank}, {"torsion", torsion}};
}

json groups_to_json(const std::vector<HomologyGroup>& groups) {
  json a = json::array();
  for (const auto& h : groups) a.push_back(group_to_json(h));
  return a;
}

json to_json(const HomologyReport& r) {
  return {{"schema", kSchemaVersion},     {"shelf", r.shelf},
          {"kind", r.kind},               {"coefficients", r.coefficients},
          {"augmented", r.augmented},     {"groups", groups_to_json(r.groups)}};
}

json complex_to_json(const ShelfComplex& cx) {
  return {{"size", cx.vertex_count()}, {"maximal_simplices", cx.maximal_simplices()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace shelfhom::tools
