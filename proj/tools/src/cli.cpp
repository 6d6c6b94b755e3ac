#include "shelfhom/tools/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "shelfhom/families.hpp"
#include "shelfhom/orbits.hpp"
#include "shelfhom/tools/scans.hpp"

namespace shelfhom::tools {
namespace {

struct GlobalOptions {
  std::string input;
  std::string output;
  int maxdeg = -1;
  std::string augmented = "default";
  std::size_t cap = kDefaultBasisCap;
  std::size_t jobs = 1;
  bool no_timestamp = false;
};

std::optional<bool> augmentation(const GlobalOptions& g) {
  if (g.augmented == "on") return true;
  if (g.augmented == "off") return false;
  return std::nullopt;
}

int degree_or(const GlobalOptions& g, int fallback) {
  if (g.maxdeg < -1) throw DegreeNegative("--maxdeg must be nonnegative");
  return g.maxdeg < 0 ? fallback : g.maxdeg;
}

ShelfDocument load(const GlobalOptions& g) {
  if (g.input.empty()) throw ParseError("--input is required for this command");
  return parse_document(read_file(g.input));
}

json shelf_id(const BinaryOpTable& t) {
  if (t.size() <= kCanonicalSizeLimit) return key_to_json(canonical_form(t));
  return table_to_json(t);
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

void emit(json report, const GlobalOptions& g, std::ostream& out) {
  if (!report.contains("schema")) report["schema"] = kSchemaVersion;
  if (!g.no_timestamp) report["timestamp"] = timestamp();
  const auto text = report.dump(2) + "\n";
  if (g.output.empty() || g.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(g.output, std::ios::binary | std::ios::trunc);
  if (!f) throw ParseError("cannot write '" + g.output + "'");
  f << text;
}

json cmd_validate(const GlobalOptions& g) {
  const auto doc = load(g);
  json j{{"size", doc.size}, {"ops", doc.ops.size()}};
  if (doc.ops.size() == 1) {
    const auto shelf = validate_shelf(doc.ops.front());
    const auto f = classify(shelf);
    j["shelf"] = shelf_id(shelf.table());
    j["flags"] = {{"spindle", f.is_spindle},
                  {"rack", f.is_rack},
                  {"left_connected", f.is_left_connected},
                  {"invertible", f.is_invertible}};
  } else {
    validate_multishelf(doc.ops);
  }
  j["valid"] = true;
  return j;
}

json cmd_orbits(const GlobalOptions& g) {
  const auto doc = load(g);
  const auto shelf = validate_shelf(doc.ops.front());
  const auto orb = left_orbits(shelf);
  return {{"size", doc.size}, {"count", orb.count()}, {"blocks", orb.blocks()}};
}

struct HomologyArgs {
  std::string kind = "shelf";
  std::vector<std::int64_t> coefficients;
  std::string matrices_csv;
};

json cmd_homology(const GlobalOptions& g, const HomologyArgs& a) {
  const auto doc = load(g);
  const int maxdeg = degree_or(g, 3);
  const auto kind = parse_homology_kind(a.kind);
  HomologyReport rep;
  rep.kind = to_string(kind);

  std::optional<ChainComplex> cx;
  if (doc.ops.size() > 1 || (!a.coefficients.empty() && kind != HomologyKind::Quandle)) {
    // General multi-shelf differential.
    const auto ms = validate_multishelf(doc.ops);
    CoefficientVector c{a.coefficients};
    if (c.values.empty()) c.values.assign(ms.op_count(), 1);
    if (c.values.size() != ms.op_count())
      throw SizeMismatch("--coefficients needs one value per op");
    rep.augmented = augmentation(g).value_or(true);
    rep.coefficients = c.values;
    rep.shelf = json::array();
    for (const auto& op : ms.ops()) rep.shelf.push_back(shelf_id(op));
    cx = build_complex(ms, c, maxdeg + 1, rep.augmented, g.cap);
    rep.groups = homology_groups(*cx, g.jobs);
  } else {
    const auto shelf = validate_shelf(doc.ops.front());
    rep.shelf = shelf_id(shelf.table());
    rep.augmented = augmentation(g).value_or(default_augmentation(kind));
    if (kind == HomologyKind::Quandle) {
      CoefficientVector c{a.coefficients.empty() ? std::vector<std::int64_t>{1, -1}
                                                 : a.coefficients};
      rep.coefficients = c.values;
      cx = quandle_quotient_complex(shelf, c, maxdeg + 1, rep.augmented, g.cap);
      rep.groups = homology_groups(*cx, g.jobs);
    } else {
      rep.coefficients = kind == HomologyKind::Rack ? std::vector<std::int64_t>{1, -1}
                                                    : std::vector<std::int64_t>{1};
      rep.groups = preset_homology(shelf, kind, maxdeg, rep.augmented, g.cap, g.jobs);
      if (!a.matrices_csv.empty()) {
        std::vector<BinaryOpTable> ops{shelf.table()};
        if (kind == HomologyKind::Rack) ops.push_back(BinaryOpTable::identity(shelf.size()));
        cx = build_complex(validate_multishelf(std::move(ops)), {rep.coefficients}, maxdeg + 1,
                           rep.augmented, g.cap);
      }
    }
  }
  if (!a.matrices_csv.empty() && cx) {
    for (int d = 0; d <= cx->max_degree(); ++d) {
      const auto path = a.matrices_csv + "_d" + std::to_string(d) + ".csv";
      std::ofstream f(path);
      if (!f) throw ParseError("cannot write '" + path + "'");
      cx->boundary(d).write_csv(f);
    }
  }
  return to_json(rep);
}

json cmd_simplicial(const GlobalOptions& g) {
  const auto doc = load(g);
  const auto shelf = validate_shelf(doc.ops.front());
  const auto cx = build_shelf_complex(
      shelf, g.maxdeg < 0 ? std::nullopt : std::optional<int>(g.maxdeg), g.cap);
  const auto comps = components(cx);
  std::vector<HomologyGroup> groups;
  for (int d = 0; d <= cx.max_dimension(); ++d) groups.push_back(simplicial_homology(cx, d));
  json counts = json::array();
  for (int d = 0; d <= cx.max_dimension(); ++d) counts.push_back(cx.simplices(d).size());
  return {{"shelf", shelf_id(shelf.table())},
          {"complex", complex_to_json(cx)},
          {"complete", cx.complete()},
          {"simplex_counts", counts},
          {"components", comps.count},
          {"component_of", comps.label},
          {"missing_faces", cx.missing_faces()},
          {"groups", groups_to_json(groups)}};
}

json cmd_enumerate(const GlobalOptions& g, std::size_t n) {
  if (n == 0) throw OutOfRange("--n must be positive");
  if (n > kEnumerationSizeLimit)
    throw PracticalSizeLimit("enumeration is limited to n <= " +
                             std::to_string(kEnumerationSizeLimit));
  const auto keys = enumerate_shelves(n, g.jobs);
  json entries = json::array();
  for (const auto& k : keys) {
    const auto shelf = validate_shelf(k.table);
    const auto f = classify(shelf);
    const auto orbits = left_orbits(shelf).count();
    json e{{"key", key_to_json(k)},
           {"table", table_to_json(k.table)},
           {"orbits", orbits},
           {"flags",
            {{"spindle", f.is_spindle},
             {"rack", f.is_rack},
             {"left_connected", f.is_left_connected},
             {"invertible", f.is_invertible}}}};
    // H0 of augmented shelf homology only needs d_1, which is cheap at every size.
    if (n <= kScanSizeLimit)
      e["h0_rank"] = preset_homology(shelf, HomologyKind::Shelf, 0, true, g.cap).front().rank;
    entries.push_back(std::move(e));
  }
  return {{"size", n}, {"count", keys.size()}, {"classes", entries}};
}

struct ScanArgs {
  std::string which;
  std::size_t n = 3;
  std::size_t omega = 1;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::int64_t range = 3;
};

json cmd_scan(const GlobalOptions& g, const ScanArgs& a) {
  const ScanOptions opts{g.cap, g.jobs};
  if (a.which == "growth") return to_json(scan_growth(a.n, degree_or(g, 4), opts));
  if (a.which == "example4") return to_json(scan_example4(a.n, degree_or(g, 3), opts));
  if (a.which == "boolean")
    return to_json(scan_boolean(a.omega, {-1, 0, 1}, degree_or(g, 3),
                                augmentation(g).value_or(true), opts));
  if (a.which == "hyperplane") {
    std::optional<MultiShelf> ms;
    if (!g.input.empty()) {
      ms = validate_multishelf(load(g).ops);
    } else {
      const auto full = make_multishelf(family::BooleanMultiShelf{a.omega});
      ms = validate_multishelf({full.op(0), full.op(1), full.op(2)});
    }
    return to_json(scan_hyperplane(*ms, a.samples, a.range, a.seed, degree_or(g, 3),
                                   augmentation(g).value_or(true), opts));
  }
  if (a.which == "orbit-projection") return to_json(scan_orbit_projection(a.n, degree_or(g, 1), opts));
  throw ParseError("unknown scan '" + a.which + "'");
}

json error_json(const std::string& category, const std::string& message) {
  return {{"error", {{"category", category}, {"message", message}}}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shelf and multi-shelf homology explorer", "shelftool"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--input", g.input, "Shelf or multi-shelf JSON file");
  app.add_option("--output", g.output, "Report path (default: stdout)");
  app.add_option("--maxdeg", g.maxdeg, "Highest degree reported");
  app.add_option("--augmented", g.augmented, "Augmentation at degree 0")
      ->check(CLI::IsMember({"on", "off", "default"}));
  app.add_option("--cap", g.cap, "Largest chain group basis, in elements");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp field");

  auto* validate = app.add_subcommand("validate", "Check distributivity and classify");
  auto* orbits = app.add_subcommand("orbits", "Left orbits");
  auto* homology = app.add_subcommand("homology", "Shelf, rack, quandle or multi-shelf homology");
  HomologyArgs ha;
  homology->add_option("--kind", ha.kind)->check(CLI::IsMember({"shelf", "rack", "quandle"}));
  homology->add_option("--coefficients", ha.coefficients, "One integer per op")
      ->delimiter(',');
  homology->add_option("--matrices-csv", ha.matrices_csv, "Prefix for boundary matrix CSVs");
  auto* simplicial = app.add_subcommand("simplicial", "Simplicial shelf complex");
  auto* enumerate = app.add_subcommand("enumerate", "Shelves of size n up to isomorphism");
  std::size_t enum_n = 2;
  enumerate->add_option("--n", enum_n)->required();
  auto* scan = app.add_subcommand("scan", "Check a conjecture over a grid");
  ScanArgs sa;
  scan->add_option("--which", sa.which)
      ->required()
      ->check(CLI::IsMember({"growth", "example4", "boolean", "hyperplane", "orbit-projection"}));
  scan->add_option("--n", sa.n, "Carrier size");
  scan->add_option("--omega", sa.omega, "|Omega| for the Boolean multi-shelf");
  scan->add_option("--samples", sa.samples);
  scan->add_option("--seed", sa.seed);
  scan->add_option("--range", sa.range, "Coefficients are drawn from [-range, range]");
  auto* torsion = app.add_subcommand("torsion-hunt", "Classes with torsion");
  std::size_t th_n = 4;
  torsion->add_option("--n", th_n);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("input", e.what()).dump() << "\n";
    return 2;
  }

  try {
    json report;
    if (*validate) report = cmd_validate(g);
    else if (*orbits) report = cmd_orbits(g);
    else if (*homology) report = cmd_homology(g, ha);
    else if (*simplicial) report = cmd_simplicial(g);
    else if (*enumerate) report = cmd_enumerate(g, enum_n);
    else if (*scan) report = cmd_scan(g, sa);
    else if (*torsion) report = to_json(torsion_hunt(th_n, degree_or(g, 1), {g.cap, g.jobs}));
    emit(std::move(report), g, out);
    return 0;
  } catch (const Error& e) {
    switch (e.category()) {
      case ErrorCategory::Input:
        err << error_json("input", e.what()).dump() << "\n";
        return 2;
      case ErrorCategory::Resource:
        err << error_json("resource", e.what()).dump() << "\n";
        return 3;
      case ErrorCategory::Internal:
        break;
    }
    err << error_json("internal", e.what()).dump() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << "\n";
    return 4;
  }
}

}  // namespace shelfhom::tools
