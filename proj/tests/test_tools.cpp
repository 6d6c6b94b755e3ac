#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "shelfhom/families.hpp"
#include "shelfhom/tools/cli.hpp"
#include "shelfhom/tools/scans.hpp"

using namespace shelfhom;
using namespace shelfhom::tools;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "shelftool");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("shelfhom_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string shelf_file(const std::string& name, const BinaryOpTable& t) {
  return write_temp(name, to_json(ShelfDocument{t.size(), {t}, {}}).dump());
}

std::vector<std::size_t> report_ranks(const json& j) {
  std::vector<std::size_t> r;
  for (const auto& g : j["groups"]) r.push_back(g["rank"].get<std::size_t>());
  return r;
}

}  // namespace

TEST_CASE("shelf documents round-trip") {
  const auto t = fixtures::paper_m();
  ShelfDocument doc{4, {t}, {"a", "b", "c", "d"}};
  const auto back = parse_document(to_json(doc).dump());
  CHECK(back.size == 4);
  CHECK(back.ops.front() == t);
  CHECK(back.labels == doc.labels);
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"size":2,"ops":[[[0,1],[0,2]]]})"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"size":2})"), ParseError);
}

TEST_CASE("cli homology") {
  const auto ex = shelf_file("ex3.json", fixtures::exceptional3());
  auto r = run({"homology", "--input", ex, "--maxdeg", "3", "--no-timestamp"});
  REQUIRE(r.code == 0);
  CHECK(report_ranks(json::parse(r.out)) == std::vector<std::size_t>{1, 2, 6, 18});

  const auto rt = shelf_file("rt4.json", BinaryOpTable::right_trivial(4));
  r = run({"homology", "--input", rt, "--maxdeg", "2", "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(report_ranks(j) == std::vector<std::size_t>{3, 12, 48});
  CHECK(j["schema"] == 1);
  CHECK_FALSE(j.contains("timestamp"));

  r = run({"homology", "--input", rt, "--maxdeg", "1"});
  CHECK(json::parse(r.out).contains("timestamp"));

  r = run({"homology", "--input", rt, "--kind", "rack", "--maxdeg", "1", "--no-timestamp"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["augmented"] == false);
}

TEST_CASE("cli multi-shelf homology and matrix export") {
  const auto b = make_multishelf(family::BooleanMultiShelf{1});
  const auto path = write_temp(
      "bool1.json",
      to_json(ShelfDocument{2, {b.op(0), b.op(1), b.op(2)}, {}}).dump());
  const auto prefix = (std::filesystem::temp_directory_path() / "shelfhom_test_bool").string();
  const auto r = run({"homology", "--input", path, "--coefficients", "0,0,0", "--maxdeg", "1",
                      "--matrices-csv", prefix, "--no-timestamp"});
  REQUIRE(r.code == 0);
  CHECK(report_ranks(json::parse(r.out)) == std::vector<std::size_t>{1, 4});
  CHECK(std::filesystem::exists(prefix + "_d1.csv"));
}

TEST_CASE("cli exit codes") {
  const auto bad = write_temp("bad.json", "{\"size\": 2, \"ops\": [");
  auto r = run({"homology", "--input", bad});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"]["category"] == "input");

  const auto nonshelf = shelf_file("plus3.json", fixtures::affine(3, 1, 1));
  CHECK(run({"validate", "--input", nonshelf}).code == 2);
  CHECK(run({"homology", "--input", nonshelf}).code == 2);

  const auto rt = shelf_file("rt4b.json", BinaryOpTable::right_trivial(4));
  r = run({"homology", "--input", rt, "--maxdeg", "12"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.err)["error"]["category"] == "resource");
  CHECK(run({"enumerate", "--n", "6"}).code == 3);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"homology", "--input", rt, "--augmented", "maybe"}).code == 2);
}

TEST_CASE("cli reports are deterministic") {
  const auto m = shelf_file("m.json", fixtures::paper_m());
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"homology", "--input", m, "--maxdeg", "3", "--no-timestamp"},
           {"simplicial", "--input", m, "--no-timestamp"},
           {"enumerate", "--n", "3", "--no-timestamp"},
           {"enumerate", "--n", "3", "--no-timestamp", "--jobs", "3"},
           {"scan", "--which", "growth", "--n", "2", "--no-timestamp"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run({"enumerate", "--n", "3", "--no-timestamp"}).out ==
        run({"enumerate", "--n", "3", "--no-timestamp", "--jobs", "3"}).out);
}

TEST_CASE("cli enumerate and other subcommands") {
  auto r = run({"enumerate", "--n", "2", "--no-timestamp"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 6);
  r = run({"enumerate", "--n", "1", "--no-timestamp"});
  CHECK(json::parse(r.out)["count"] == 1);
  r = run({"enumerate", "--n", "3", "--no-timestamp"});
  const auto j = json::parse(r.out);
  CHECK(j["count"] == oracle::shelf_classes(3).size());
  for (const auto& e : j["classes"])
    CHECK(e["h0_rank"].get<std::size_t>() + 1 == e["orbits"].get<std::size_t>());

  const auto m = shelf_file("m2.json", fixtures::paper_m());
  r = run({"simplicial", "--input", m, "--no-timestamp"});
  REQUIRE(r.code == 0);
  const auto s = json::parse(r.out);
  CHECK(s["components"] == 2);
  CHECK(s["groups"][1]["rank"] == 1);
  r = run({"orbits", "--input", m, "--no-timestamp"});
  CHECK(json::parse(r.out)["count"] == 2);
  r = run({"validate", "--input", m, "--no-timestamp"});
  CHECK(json::parse(r.out)["valid"] == true);
  const auto out = (std::filesystem::temp_directory_path() / "shelfhom_test_out.json").string();
  CHECK(run({"orbits", "--input", m, "--output", out}).code == 0);
  CHECK(json::parse(read_file(out))["count"] == 2);
}

TEST_CASE("growth scan on small shelves") {
  const auto rep = scan_growth(3, 4);
  CHECK(rep.summary["inconsistent"] == 0);
  CHECK(rep.summary["not_computed"] == 0);
  for (const auto& p : rep.points) CHECK(p.conjectured.has_value());
  CHECK_THROWS_AS(scan_growth(5, 2), CapExceeded);
}

TEST_CASE("example-4 scan: degree one is consistent") {
  const auto rep = scan_example4(4, 2);
  CHECK(!rep.points.empty());
  for (const auto& p : rep.points)
    if (p.parameters["degree"] == 1) CHECK(p.verdict == Verdict::Consistent);
  CHECK(example4_conjectured_rank(4, 2, 1) == 2);
}

TEST_CASE("boolean scan") {
  CHECK(boolean_conjectured_rank(1, 0, 0, 0, 1) == 4);
  CHECK(boolean_conjectured_rank(2, 0, 0, 0, 0) == 3);
  CHECK(boolean_conjectured_rank(1, 2, -2, -2, 3) == 8);
  CHECK(boolean_conjectured_rank(1, 1, 1, -2, 2) == 1);
  CHECK(boolean_conjectured_rank(1, 1, 1, 1, 2) == 0);
  const auto rep = scan_boolean(1, {-1, 0, 1}, 3);
  CHECK(rep.points.size() == 27 * 4);
  for (const auto& p : rep.points) {
    CHECK(p.verdict != Verdict::NotComputed);
    if (p.verdict == Verdict::Inconsistent) {
      CHECK(p.conjectured.has_value());
      CHECK(p.observed.size() == 1);
    }
  }
  const auto zero = std::find_if(rep.points.begin(), rep.points.end(), [](const ScanPoint& p) {
    return p.parameters["coefficients"] == std::vector<int>{0, 0, 0} && p.parameters["degree"] == 1;
  });
  REQUIRE(zero != rep.points.end());
  CHECK(zero->observed.front().rank == 4);
  CHECK(zero->verdict == Verdict::Consistent);
  CHECK_THROWS_AS(scan_boolean(3, {0}, 1), CapExceeded);
}

TEST_CASE("hyperplane probe") {
  const auto full = make_multishelf(family::BooleanMultiShelf{1});
  const auto ms = validate_multishelf({full.op(0), full.op(1), full.op(2)});
  const auto rep = scan_hyperplane(ms, 60, 5, 42, 3);
  CHECK(rep.points.size() == 60);
  CHECK(rep.summary["exceptional_fraction"].get<double>() <= 0.2);
  const auto again = scan_hyperplane(ms, 60, 5, 42, 3);
  CHECK(to_json(rep) == to_json(again));
  CHECK_THROWS_AS(scan_hyperplane(ms, 0, 5, 1, 2), CapExceeded);
}

TEST_CASE("torsion hunt") {
  CHECK(torsion_hunt(1, 2).points.empty());
  CHECK(torsion_hunt(2, 2).points.empty());
  const auto rep = torsion_hunt(4, 1);
  REQUIRE(!rep.points.empty());
  bool pointed = false;
  for (const auto& p : rep.points) {
    CHECK(fixtures::has_torsion(p.observed));
    pointed = pointed || p.details["pointed_map_type"].get<bool>();
  }
  CHECK(pointed);
  CHECK(is_pointed_map_shelf(make_shelf(family::PointedMap{3, {1, 0, 0, 3}}).table()));
  CHECK_FALSE(is_pointed_map_shelf(BinaryOpTable::identity(3)));
}

TEST_CASE("orbit projection is neither injective nor surjective in general") {
  const auto rep = scan_orbit_projection(3, 1);
  CHECK(rep.summary["not_injective"].get<std::size_t>() >= 1);
  CHECK(rep.summary["not_surjective"].get<std::size_t>() >= 1);
  for (const auto& p : rep.points) {
    const auto pi = p.details["rank_pi_star"].get<std::size_t>();
    CHECK(pi <= p.details["rank_H_X"].get<std::size_t>());
    CHECK(pi <= p.details["rank_H_O"].get<std::size_t>());
    if (pi < p.details["rank_H_O"].get<std::size_t>()) CHECK_FALSE(p.details["surjective"].get<bool>());
  }
  // Right-trivial shelves are their own orbit quotient.
  for (const auto& p : scan_orbit_projection(3, 2).points)
    if (p.details["orbits"] == p.parameters["size"]) CHECK_FALSE(p.flagged);
  CHECK_THROWS_AS(scan_orbit_projection(3, 4), DegreeOutOfRange);
}
