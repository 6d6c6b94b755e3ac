#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shelfhom/canonical.hpp"
#include "shelfhom/chain_complex.hpp"
#include "shelfhom/simplicial.hpp"

namespace shelfhom::tools {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"size": n, "ops": [[[...]], ...], "labels": [...]}; tables are 0-indexed and row-major.
struct ShelfDocument {
  std::size_t size = 0;
  std::vector<BinaryOpTable> ops;
  std::vector<std::string> labels;
};

/// Throws ParseError on malformed JSON or a schema mismatch.
ShelfDocument parse_document(const std::string& text);
ShelfDocument document_from_json(const json& j);
json to_json(const ShelfDocument& doc);

/// Flattened canonical table.
json key_to_json(const IsoClassKey& key);
json table_to_json(const BinaryOpTable& t);
json group_to_json(const HomologyGroup& h);
json groups_to_json(const std::vector<HomologyGroup>& groups);

struct HomologyReport {
  /// Canonical key for carriers within the canonical-form limit, else the raw table.
  json shelf;
  std::string kind;
  std::vector<std::int64_t> coefficients;
  bool augmented = false;
  std::vector<HomologyGroup> groups;
};

json to_json(const HomologyReport& r);

/// {"size": n, "maximal_simplices": [[...], ...]}
json complex_to_json(const ShelfComplex& cx);

/// Reads a whole file; ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace shelfhom::tools
