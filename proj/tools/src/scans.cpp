#include "shelfhom/tools/scans.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "shelfhom/families.hpp"
#include "shelfhom/orbits.hpp"
#include "shelfhom/parallel.hpp"
#include "shelfhom/smith.hpp"

namespace shelfhom::tools {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Inconsistent: return "inconsistent";
    case Verdict::NotComputed: return "not-computed";
  }
  return "?";
}

json to_json(const ScanReport& r) {
  json points = json::array();
  for (const auto& p : r.points) {
    json j{{"parameters", p.parameters},
           {"observed", groups_to_json(p.observed)},
           {"verdict", to_string(p.verdict)},
           {"flagged", p.flagged}};
    if (p.conjectured) j["conjectured"] = *p.conjectured;
    if (!p.details.is_null()) j["details"] = p.details;
    points.push_back(std::move(j));
  }
  return {{"schema", kSchemaVersion}, {"target", r.target}, {"grid", r.grid},
          {"points", points},         {"summary", r.summary}};
}

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= b;
  return p;
}

void check_size(std::size_t n, std::size_t limit, const char* what) {
  if (n == 0) throw OutOfRange(std::string(what) + ": size must be positive");
  if (n > limit)
    throw CapExceeded(std::string(what) + " is limited to carriers of size <= " +
                      std::to_string(limit));
}

json summarize(const std::vector<ScanPoint>& pts) {
  std::size_t c = 0, i = 0, nc = 0, f = 0;
  for (const auto& p : pts) {
    if (p.verdict == Verdict::Consistent) ++c;
    else if (p.verdict == Verdict::Inconsistent) ++i;
    else ++nc;
    if (p.flagged) ++f;
  }
  return {{"points", pts.size()}, {"consistent", c}, {"inconsistent", i},
          {"not_computed", nc},   {"flagged", f}};
}

ScanPoint rank_point(json params, HomologyGroup observed, std::int64_t conjectured) {
  ScanPoint p;
  p.parameters = std::move(params);
  p.verdict = static_cast<std::int64_t>(observed.rank) == conjectured ? Verdict::Consistent
                                                                       : Verdict::Inconsistent;
  p.observed = {std::move(observed)};
  p.conjectured = conjectured;
  return p;
}

std::vector<std::vector<HomologyGroup>> shelf_homology_all(const std::vector<IsoClassKey>& keys,
                                                           int max_degree,
                                                           const ScanOptions& opts) {
  std::vector<std::vector<HomologyGroup>> out(keys.size());
  parallel_for(keys.size(), opts.jobs, [&](std::size_t i) {
    out[i] = preset_homology(validate_shelf(keys[i].table), HomologyKind::Shelf, max_degree,
                             std::nullopt, opts.cap);
  });
  return out;
}

// Integral kernel by unimodular column operations on a dense copy: the columns of the
// transform whose image vanishes span ker(a) and form a saturated lattice basis.
std::vector<std::vector<Integer>> integer_kernel(const SparseIntMatrix& m) {
  auto a = m.to_dense();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> u(cols, std::vector<Integer>(cols, 0));  // u[col][entry]
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
  auto axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {  // col dst -= q col src
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
    for (std::size_t i = 0; i < cols; ++i) u[dst][i] -= q * u[src][i];
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    std::swap(u[x], u[y]);
  };
  std::size_t p = 0;
  for (std::size_t r = 0; r < rows && p < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = p; j < cols; ++j)
        if (a[r][j] != 0 && (best == cols || abs(a[r][j]) < abs(a[r][best]))) best = j;
      if (best == cols) break;
      bool done = true;
      for (std::size_t j = p; j < cols; ++j) {
        if (j == best || a[r][j] == 0) continue;
        axpy(j, best, Integer(a[r][j] / a[r][best]));
        if (a[r][j] != 0) done = false;
      }
      if (done) {
        swap_cols(p++, best);
        break;
      }
    }
  }
  return {u.begin() + static_cast<std::ptrdiff_t>(p), u.end()};
}

// Columns of a sparse matrix built from dense column vectors.
SparseIntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& cols) {
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (cols[c][r] != 0) t.push_back({r, c, cols[c][r]});
  return SparseIntMatrix::from_triplets(rows, cols.size(), std::move(t));
}

SparseIntMatrix hconcat(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  auto t = a.triplets();
  for (auto e : b.triplets()) {
    e.col += a.cols();
    t.push_back(std::move(e));
  }
  return SparseIntMatrix::from_triplets(a.rows(), a.cols() + b.cols(), std::move(t));
}

}  // namespace

std::int64_t boolean_conjectured_rank(std::size_t omega, std::int64_t a0, std::int64_t a1,
                                      std::int64_t a2, int degree) {
  const auto w = static_cast<std::int64_t>(omega);
  const bool zero = a0 == 0 && a1 == 0 && a2 == 0;
  const bool special = !zero && a1 == -a0 && a2 == -a0;  // c(1, -1, -1), c != 0
  if (degree == 0) {
    if (zero) return ipow(2, static_cast<int>(omega)) - 1;
    if (special) return w;
    return 0;
  }
  if (zero) return ipow(2, static_cast<int>(omega) * (degree + 1));
  if (special) return w * ipow(2, degree);
  if (a0 + a1 + a2 == 0) return 1;
  return 0;
}

std::int64_t example4_conjectured_rank(std::size_t size, std::size_t orbits, int degree) {
  const auto x = static_cast<std::int64_t>(size);
  const auto r = static_cast<std::int64_t>(orbits);
  return ipow(x, degree - 1) * (2 + (x + 1) * (r - 2));
}

bool is_pointed_map_shelf(const BinaryOpTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element b = 0; b < n; ++b) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      if (x == b) continue;
      for (Element y = 0; y < n && ok; ++y) ok = t(x, y) == y;
    }
    for (Element y = 0; y < n && ok; ++y) ok = (t(b, y) == b) == (y == b);
    if (ok) return true;
  }
  return false;
}

ScanReport scan_growth(std::size_t max_size, int max_degree, const ScanOptions& opts) {
  check_size(max_size, kScanSizeLimit, "growth scan");
  if (max_degree < 1) throw DegreeOutOfRange("growth scan needs degrees up to at least 1");
  ScanReport rep;
  rep.target = "growth";
  rep.grid = {{"sizes", max_size}, {"max_degree", max_degree}};
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto keys = enumerate_shelves(n, opts.jobs);
    const auto groups = shelf_homology_all(keys, max_degree, opts);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const int start = std::max(0, static_cast<int>(n) - 2);
      for (int k = start; k + 1 <= max_degree; ++k) {
        const auto conj = static_cast<std::int64_t>(n * groups[i][static_cast<std::size_t>(k)].rank);
        rep.points.push_back(rank_point(
            {{"shelf", key_to_json(keys[i])}, {"size", n}, {"degree", k + 1}},
            groups[i][static_cast<std::size_t>(k) + 1], conj));
      }
    }
  }
  rep.summary = summarize(rep.points);
  return rep;
}

ScanReport scan_example4(std::size_t size, int max_degree, const ScanOptions& opts) {
  check_size(size, kScanSizeLimit, "example-4 scan");
  if (size < 2) throw SpecPreconditionFailed("pointed-map shelves need at least 2 elements");
  if (max_degree < 1) throw DegreeOutOfRange("example-4 scan needs degrees up to at least 1");
  // Up to isomorphism b = 0, so g fixes 0 and maps everything else into 1..n-1.
  std::set<IsoClassKey> classes;
  std::vector<Element> g(size, 1);
  g[0] = 0;
  while (true) {
    classes.insert(canonical_form(make_shelf(family::PointedMap{0, g}).table()));
    std::size_t i = 1;
    while (i < size && ++g[i] == size) g[i++] = 1;
    if (i == size) break;
  }
  const std::vector<IsoClassKey> keys(classes.begin(), classes.end());
  const auto groups = shelf_homology_all(keys, max_degree, opts);

  ScanReport rep;
  rep.target = "example4";
  rep.grid = {{"size", size}, {"max_degree", max_degree}, {"classes", keys.size()}};
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto r = left_orbits(keys[i].table).count();
    for (int d = 1; d <= max_degree; ++d) {
      auto p = rank_point({{"shelf", key_to_json(keys[i])}, {"orbits", r}, {"degree", d}},
                          groups[i][static_cast<std::size_t>(d)],
                          example4_conjectured_rank(size, r, d));
      if (d == 1) p.details = {{"note", "degree 1 is a proven case"}};
      rep.points.push_back(std::move(p));
    }
  }
  rep.summary = summarize(rep.points);
  return rep;
}

ScanReport scan_boolean(std::size_t omega, const std::vector<std::int64_t>& grid, int max_degree,
                        bool augmented, const ScanOptions& opts) {
  if (omega == 0 || omega > kBooleanOmegaLimit)
    throw CapExceeded("Boolean scan supports 1 <= |Omega| <= " +
                      std::to_string(kBooleanOmegaLimit));
  if (max_degree < 0) throw DegreeNegative("maximum degree must be nonnegative");
  const auto full = make_multishelf(family::BooleanMultiShelf{omega});
  const auto ms = validate_multishelf({full.op(0), full.op(1), full.op(2)});

  std::vector<std::array<std::int64_t, 3>> coeffs;
  for (auto a0 : grid)
    for (auto a1 : grid)
      for (auto a2 : grid) coeffs.push_back({a0, a1, a2});
  std::vector<std::vector<HomologyGroup>> groups(coeffs.size());
  parallel_for(coeffs.size(), opts.jobs, [&](std::size_t i) {
    const CoefficientVector c{{coeffs[i][0], coeffs[i][1], coeffs[i][2]}};
    groups[i] = homology_groups(build_complex(ms, c, max_degree + 1, augmented, opts.cap));
  });

  ScanReport rep;
  rep.target = "boolean";
  rep.grid = {{"omega", omega}, {"values", grid}, {"max_degree", max_degree},
              {"augmented", augmented}};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& a = coeffs[i];
    for (int d = 0; d <= max_degree; ++d)
      rep.points.push_back(rank_point(
          {{"coefficients", std::vector<std::int64_t>(a.begin(), a.end())}, {"degree", d}},
          groups[i][static_cast<std::size_t>(d)],
          boolean_conjectured_rank(omega, a[0], a[1], a[2], d)));
  }
  rep.summary = summarize(rep.points);
  return rep;
}

ScanReport scan_hyperplane(const MultiShelf& ms, std::size_t samples, std::int64_t range,
                           std::uint64_t seed, int max_degree, bool augmented,
                           const ScanOptions& opts) {
  if (samples == 0 || samples > kHyperplaneSampleLimit)
    throw CapExceeded("hyperplane probe takes 1.." + std::to_string(kHyperplaneSampleLimit) +
                      " samples");
  if (range <= 0) throw OutOfRange("coefficient range must be positive");
  if (max_degree < 0) throw DegreeNegative("maximum degree must be nonnegative");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  std::vector<CoefficientVector> coeffs(samples);
  for (auto& c : coeffs)
    for (std::size_t k = 0; k < ms.op_count(); ++k) c.values.push_back(dist(rng));

  std::vector<std::vector<HomologyGroup>> groups(samples);
  parallel_for(samples, opts.jobs, [&](std::size_t i) {
    groups[i] = homology_groups(build_complex(ms, coeffs[i], max_degree + 1, augmented, opts.cap));
  });

  auto ranks = [&](std::size_t i) {
    std::vector<std::size_t> r;
    for (const auto& h : groups[i]) r.push_back(h.rank);
    return r;
  };
  std::map<std::vector<std::size_t>, std::size_t> freq;
  for (std::size_t i = 0; i < samples; ++i) ++freq[ranks(i)];
  // Most frequent sequence; ties go to the lexicographically smallest.
  auto generic = freq.begin();
  for (auto it = freq.begin(); it != freq.end(); ++it)
    if (it->second > generic->second) generic = it;

  ScanReport rep;
  rep.target = "hyperplane";
  rep.grid = {{"ops", ms.op_count()}, {"size", ms.size()},     {"samples", samples},
              {"range", range},       {"seed", seed},           {"max_degree", max_degree},
              {"augmented", augmented}};
  std::size_t exceptional = 0;
  json exceptional_set = json::array();
  for (std::size_t i = 0; i < samples; ++i) {
    ScanPoint p;
    p.parameters = {{"coefficients", coeffs[i].values}};
    p.observed = groups[i];
    p.verdict = Verdict::Consistent;
    p.flagged = ranks(i) != generic->first;
    if (p.flagged) {
      ++exceptional;
      exceptional_set.push_back(coeffs[i].values);
    }
    rep.points.push_back(std::move(p));
  }
  rep.summary = summarize(rep.points);
  rep.summary["generic_ranks"] = generic->first;
  rep.summary["exceptional"] = exceptional;
  rep.summary["exceptional_fraction"] =
      static_cast<double>(exceptional) / static_cast<double>(samples);
  rep.summary["exceptional_set"] = exceptional_set;
  return rep;
}

ScanReport torsion_hunt(std::size_t n, int max_degree, const ScanOptions& opts) {
  check_size(n, kScanSizeLimit, "torsion hunt");
  if (max_degree < 0) throw DegreeNegative("maximum degree must be nonnegative");
  const auto keys = enumerate_shelves(n, opts.jobs);
  const auto groups = shelf_homology_all(keys, max_degree, opts);

  ScanReport rep;
  rep.target = "torsion-hunt";
  rep.grid = {{"size", n}, {"max_degree", max_degree}, {"classes", keys.size()}};
  std::size_t pointed = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const bool torsion = std::any_of(groups[i].begin(), groups[i].end(),
                                     [](const HomologyGroup& h) { return !h.torsion.empty(); });
    if (!torsion) continue;
    ScanPoint p;
    p.parameters = {{"shelf", key_to_json(keys[i])}};
    p.observed = groups[i];
    const bool pm = is_pointed_map_shelf(keys[i].table);
    pointed += pm;
    p.verdict = pm ? Verdict::Consistent : Verdict::Inconsistent;
    p.flagged = true;
    p.details = {{"pointed_map_type", pm},
                 {"orbits", left_orbits(keys[i].table).count()},
                 {"table", table_to_json(keys[i].table)}};
    rep.points.push_back(std::move(p));
  }
  rep.summary = summarize(rep.points);
  rep.summary["classes_with_torsion"] = rep.points.size();
  rep.summary["pointed_map_type"] = pointed;
  return rep;
}

ScanReport scan_orbit_projection(std::size_t max_size, int max_degree,
                                 const ScanOptions& opts) {
  check_size(max_size, kScanSizeLimit, "orbit projection scan");
  if (max_degree < 1 || max_degree > kOrbitProjectionDegreeLimit)
    throw DegreeOutOfRange("orbit projection scan covers degrees 1.." +
                           std::to_string(kOrbitProjectionDegreeLimit));
  ScanReport rep;
  rep.target = "orbit-projection";
  rep.grid = {{"sizes", max_size}, {"max_degree", max_degree}};
  std::size_t not_injective = 0, not_surjective = 0;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto keys = enumerate_shelves(n, opts.jobs);
    std::vector<std::vector<ScanPoint>> pts(keys.size());
    parallel_for(keys.size(), opts.jobs, [&](std::size_t i) {
      const auto shelf = validate_shelf(keys[i].table);
      const auto q = orbit_quotient(shelf);
      const std::size_t r = q.quotient.size();
      const auto hx = preset_homology(shelf, HomologyKind::Shelf, max_degree, std::nullopt, opts.cap);
      const auto ho =
          preset_homology(q.quotient, HomologyKind::Shelf, max_degree, std::nullopt, opts.cap);
      const auto mx = MultiShelf::from_shelf(shelf);
      const auto mo = MultiShelf::from_shelf(q.quotient);
      for (int d = 1; d <= max_degree; ++d) {
        const auto len = static_cast<std::size_t>(d) + 1;
        const auto cycles_x = integer_kernel(boundary_matrix(mx, {{1}}, d, true));
        const auto cycles_o = integer_kernel(boundary_matrix(mo, {{1}}, d, true));
        const auto bounds_o = boundary_matrix(mo, {{1}}, d + 1, true);
        // pi on tuples, applied to each cycle of X.
        const std::size_t dim_o = *checked_power(r, len);
        std::vector<std::vector<Integer>> images;
        for (const auto& z : cycles_x) {
          std::vector<Integer> v(dim_o, 0);
          for (std::size_t col = 0; col < z.size(); ++col) {
            if (z[col] == 0) continue;
            auto t = index_tuple(col, n, len);
            for (auto& e : t) e = q.projection[e];
            v[basis_index(t, r)] += z[col];
          }
          images.push_back(std::move(v));
        }
        const auto span = smith_normal_form(hconcat(from_columns(dim_o, images), bounds_o));
        const std::size_t pi_rank = span.rank() - smith_normal_form(bounds_o).rank();
        const auto& gx = hx[static_cast<std::size_t>(d)];
        const auto& go = ho[static_cast<std::size_t>(d)];
        const bool inj = pi_rank == gx.rank;
        const bool onto = span.rank() == cycles_o.size() && span.torsion().empty();

        ScanPoint p;
        p.parameters = {{"shelf", key_to_json(keys[i])}, {"size", n}, {"degree", d}};
        p.observed = {gx, go};
        p.verdict = Verdict::Consistent;
        p.flagged = !inj || !onto;
        p.details = {{"rank_H_X", gx.rank},     {"rank_H_O", go.rank},
                     {"rank_pi_star", pi_rank}, {"injective_rationally", inj},
                     {"surjective", onto},      {"orbits", r}};
        pts[i].push_back(std::move(p));
      }
    });
    for (auto& per_class : pts)
      for (auto& p : per_class) {
        not_injective += !p.details["injective_rationally"].get<bool>();
        not_surjective += !p.details["surjective"].get<bool>();
        rep.points.push_back(std::move(p));
      }
  }
  rep.summary = summarize(rep.points);
  rep.summary["not_injective"] = not_injective;
  rep.summary["not_surjective"] = not_surjective;
  return rep;
}

}  // namespace shelfhom::tools
