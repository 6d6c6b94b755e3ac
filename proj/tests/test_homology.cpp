#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "shelfhom/canonical.hpp"
#include "shelfhom/families.hpp"
#include "shelfhom/orbits.hpp"
#include "shelfhom/smith.hpp"

using namespace shelfhom;
using fixtures::ranks;
using fixtures::table;

namespace {

SparseIntMatrix sparse(const oracle::Dense& d) { return SparseIntMatrix::from_dense(d); }

std::vector<Integer> diag(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("tuple basis") {
  const std::vector<Element> a{0, 0}, b{2, 1};
  CHECK(basis_index(a, 3) == 0);
  CHECK(basis_index(b, 3) == 7);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Element> v(0, 4);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Element> t(1 + static_cast<std::size_t>(i % 5));
    for (auto& x : t) x = v(rng);
    CHECK(index_tuple(basis_index(t, 5), 5, t.size()) == t);
  }
  CHECK(!checked_power(2, 70).has_value());
}

TEST_CASE("sparse matrix basics") {
  const auto m = SparseIntMatrix::from_triplets(2, 3, {{0, 1, 2}, {0, 1, 3}, {1, 2, -1}, {1, 0, 0}});
  CHECK(m.nnz() == 2);
  CHECK(m.at(0, 1) == 5);
  CHECK(m.transpose().transpose() == m);
  CHECK((m - m).is_zero());
  CHECK(SparseIntMatrix::identity(2) * m == m);
  CHECK_THROWS_AS(SparseIntMatrix::from_triplets(2, 2, {{2, 0, 1}}), OutOfRange);
  std::ostringstream csv;
  m.write_csv(csv);
  CHECK(csv.str() == "row,col,value\n0,1,5\n1,2,-1\n");
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(sparse({{2, 4}, {6, 8}})).factors == diag({2, 4}));
  CHECK(smith_normal_form(SparseIntMatrix::identity(5)).rank() == 5);
  CHECK(smith_normal_form(SparseIntMatrix::identity(5)).torsion().empty());
  CHECK(smith_normal_form(SparseIntMatrix(3, 4)).rank() == 0);
  CHECK(smith_normal_form(SparseIntMatrix(0, 4)).rank() == 0);
  CHECK(smith_normal_form(sparse({{2, 0}, {0, 3}})).factors == diag({1, 6}));
  CHECK(diagonal_to_invariant_factors(diag({4, 6, 10})) == diag({2, 2, 60}));
}

TEST_CASE("smith normal form agrees with the dense oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int i = 0; i < 200; ++i) {
    const auto d = oracle::random_dense(rng, dim(rng), dim(rng), 1 + i % 9);
    const auto expect = oracle::dense_snf(d);
    CHECK(smith_normal_form(sparse(d)).factors == expect);
    CHECK(smith_normal_form_bigint(sparse(d)).factors == expect);
  }
}

TEST_CASE("dense oracle agrees with determinantal divisors") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int i = 0; i < 60; ++i) {
    const auto d = oracle::random_dense(rng, dim(rng), dim(rng), 6);
    CHECK(oracle::dense_snf(d) == oracle::minor_gcd_factors(d));
  }
}

TEST_CASE("smith normal form survives 64-bit overflow") {
  const Integer big = Integer(1) << 62;
  oracle::Dense d{{big, big + 1, 3}, {big - 1, big, 5}, {7, big + 3, big}};
  CHECK(smith_normal_form(sparse(d)).factors == oracle::dense_snf(d));
}

TEST_CASE("smith normal form is invariant under basis permutations") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto d = oracle::random_dense(rng, 6, 7, 5);
    std::vector<std::size_t> rp(6), cp(7);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    CHECK(smith_normal_form(sparse(d).permuted(rp, cp)).factors ==
          smith_normal_form(sparse(d)).factors);
  }
}

TEST_CASE("boundary matrices match the defining formula") {
  const auto star = fixtures::paper_m();
  const auto ms = validate_multishelf({star});
  const auto d1 = boundary_matrix(ms, {{1}}, 1, false);
  for (Element x0 = 0; x0 < 4; ++x0)
    for (Element x1 = 0; x1 < 4; ++x1) {
      const auto col = x0 * 4 + x1;
      if (star(x0, x1) == x1) {
        CHECK(d1.column(col).empty());
      } else {
        CHECK(d1.at(x1, col) == 1);
        CHECK(d1.at(star(x0, x1), col) == -1);
      }
    }
  const auto rack = validate_multishelf({star, BinaryOpTable::identity(4)});
  const auto r1 = boundary_matrix(rack, {{1, -1}}, 1, false);
  for (Element x0 = 0; x0 < 4; ++x0)
    for (Element x1 = 0; x1 < 4; ++x1) {
      const auto col = x0 * 4 + x1;
      CHECK(r1.at(x0, col) == (x0 == star(x0, x1) ? 0 : 1));
      CHECK(r1.at(star(x0, x1), col) == (x0 == star(x0, x1) ? 0 : -1));
    }
  const auto boolean = make_multishelf(family::BooleanMultiShelf{1});
  for (int d = 1; d <= 3; ++d) {
    const auto z = boundary_matrix(boolean, {{0, 0, 0, 0}}, d, true);
    CHECK(z.is_zero());
    CHECK(z.rows() == oracle::power(2, static_cast<std::size_t>(d)));
  }
  CHECK(boundary_matrix(boolean, {{0, 0, 0, 0}}, 0, true).nnz() == 2);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> c(-3, 3);
  for (int i = 0; i < 10; ++i) {
    std::vector<std::int64_t> cv{c(rng), c(rng), c(rng), c(rng)};
    for (int d = 0; d <= 3; ++d)
      CHECK(oracle::to_dense(boundary_matrix(boolean, {cv}, d, true)) ==
            oracle::boundary({boolean.ops().begin(), boolean.ops().end()}, cv, 2, d, true));
  }
  CHECK_THROWS_AS(boundary_matrix(ms, {{1, 1}}, 1, false), SizeMismatch);
  CHECK_THROWS_AS(boundary_matrix(ms, {{1}}, -1, false), DegreeNegative);
}

TEST_CASE("partial differentials anticommute") {
  // All 2-op multi-shelves on 3 elements drawn from a random sample of op pairs.
  const auto shelves = oracle::all_labeled_shelves(3);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, shelves.size() - 1);
  int checked = 0;
  while (checked < 40) {
    const BinaryOpTable a(3, shelves[pick(rng)]), b(3, shelves[pick(rng)]);
    if (!oracle::mutually_distributive(a, b)) continue;
    const auto ms = validate_multishelf({a, b});
    for (int d = 2; d <= 4; ++d) {
      const auto kl = boundary_matrix(ms, {{1, 0}}, d - 1, false) *
                      boundary_matrix(ms, {{0, 1}}, d, false);
      const auto lk = boundary_matrix(ms, {{0, 1}}, d - 1, false) *
                      boundary_matrix(ms, {{1, 0}}, d, false);
      CHECK(kl == -lk);
    }
    ++checked;
  }
}

TEST_CASE("complexes are checked and capped") {
  const auto ms = validate_multishelf({fixtures::paper_m()});
  const auto cx = build_complex(ms, {{1}}, 4, true);
  CHECK(cx.max_degree() == 4);
  CHECK(cx.dimension(3) == 256);
  for (int d = 1; d <= 4; ++d) CHECK((cx.boundary(d - 1) * cx.boundary(d)).is_zero());
  CHECK_THROWS_AS(build_complex(ms, {{1}}, 30, true), CapExceeded);
  CHECK_THROWS_AS(build_complex(ms, {{1}}, 4, true, 100), CapExceeded);
  CHECK_THROWS_AS(homology(cx, 4), DegreeOutOfRange);
  CHECK_THROWS_AS(homology(cx, -1), DegreeNegative);
}

TEST_CASE("shelf homology examples") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto gs = preset_homology(validate_shelf(BinaryOpTable::right_trivial(n)),
                                    HomologyKind::Shelf, 3);
    for (std::size_t d = 0; d < gs.size(); ++d) {
      CHECK(gs[d].rank == (n - 1) * oracle::power(n, d));
      CHECK(gs[d].torsion.empty());
    }
  }
  CHECK(ranks(preset_homology(validate_shelf(fixtures::exceptional3()), HomologyKind::Shelf, 3)) ==
        std::vector<std::size_t>{1, 2, 6, 18});
  for (const auto& g :
       preset_homology(validate_shelf(fixtures::affine(3, -1, 2)), HomologyKind::Shelf, 3))
    CHECK(g.is_zero());
}

TEST_CASE("H0 rank is the orbit count minus one") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& k : enumerate_shelves(n)) {
      const auto shelf = validate_shelf(k.table);
      const auto h0 = preset_homology(shelf, HomologyKind::Shelf, 0).front();
      CHECK(h0.rank + 1 == left_orbits(shelf).count());
      CHECK(h0.torsion.empty());
    }
}

TEST_CASE("homology agrees with the dense oracle") {
  for (const auto& k : enumerate_shelves(3)) {
    const std::vector<BinaryOpTable> ops{k.table};
    const auto got = preset_homology(validate_shelf(k.table), HomologyKind::Shelf, 2);
    CHECK(fixtures::as_oracle(got) == oracle::homology(ops, {1}, 3, 2, true));
    const std::vector<BinaryOpTable> rack_ops{k.table, BinaryOpTable::identity(3)};
    const auto rack = preset_homology(validate_shelf(k.table), HomologyKind::Rack, 2);
    CHECK(fixtures::as_oracle(rack) == oracle::homology(rack_ops, {1, -1}, 3, 2, false));
  }
}

TEST_CASE("quandle homology") {
  const auto one = validate_shelf(table({{0}}));
  for (const auto& g : preset_homology(one, HomologyKind::Quandle, 3, true)) CHECK(g.is_zero());
  const auto plain = preset_homology(one, HomologyKind::Quandle, 3);
  CHECK(plain[0].rank == 1);
  for (std::size_t d = 1; d < plain.size(); ++d) CHECK(plain[d].is_zero());
  const auto q1 = quandle_quotient_complex(validate_shelf(table({{0}})), {{1, -1}}, 3);
  CHECK(q1.dimension(0) == 1);
  CHECK(q1.dimension(1) == 0);
  CHECK_THROWS_AS(preset_homology(make_shelf(family::ConstLeft{{1, 0}}), HomologyKind::Quandle, 2),
                  NotASpindle);
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& k : enumerate_shelves(n)) {
      const auto shelf = validate_shelf(k.table);
      if (!classify(shelf).is_spindle) continue;
      const std::vector<BinaryOpTable> ops{k.table, BinaryOpTable::identity(n)};
      const auto got = preset_homology(shelf, HomologyKind::Quandle, 2);
      CHECK(fixtures::as_oracle(got) == oracle::quotient_homology(ops, {1, -1}, n, 2));
    }
}

TEST_CASE("Kamada: a rack and its inverse have the same rack homology") {
  for (const auto& op : {fixtures::affine(4, 1, 0, 1), fixtures::affine(5, -1, 2)}) {
    const auto a = preset_homology(validate_shelf(op), HomologyKind::Rack, 3);
    const auto b = preset_homology(validate_shelf(inverse_op(op)), HomologyKind::Rack, 3);
    CHECK(fixtures::as_oracle(a) == fixtures::as_oracle(b));
  }
}

TEST_CASE("homology kinds parse") {
  CHECK(parse_homology_kind("rack") == HomologyKind::Rack);
  CHECK(to_string(HomologyKind::Quandle) == "quandle");
  CHECK_THROWS_AS(parse_homology_kind("group"), ParseError);
  CHECK(default_augmentation(HomologyKind::Shelf));
  CHECK_FALSE(default_augmentation(HomologyKind::Rack));
}

TEST_CASE("vanishing when a translation is bijective or a row is constant") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& k : enumerate_shelves(n)) {
      if (!has_bijective_translation(k.table) && !has_left_absorbing_element(k.table)) continue;
      for (const auto& g : preset_homology(validate_shelf(k.table), HomologyKind::Shelf, 3))
        CHECK(g.is_zero());
    }
}

TEST_CASE("idempotent right shelves") {
  const std::vector<std::vector<Element>> maps{{0, 0, 0}, {0, 1, 1, 3}, {2, 2, 2, 3}, {0, 1, 2}};
  for (const auto& g : maps) {
    const auto shelf = make_shelf(family::IdempotentRight{g});
    const std::size_t n = g.size();
    const std::size_t r = std::set<Element>(g.begin(), g.end()).size();
    const auto gs = preset_homology(shelf, HomologyKind::Shelf, 3);
    for (std::size_t d = 0; d < gs.size(); ++d) {
      CHECK(gs[d].rank == (r - 1) * oracle::power(n, d));
      CHECK(gs[d].torsion.empty());
    }
  }
}

TEST_CASE("strong retract rank formula") {
  const auto bases = enumerate_shelves(2);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 12; ++i) {
    const auto& base = bases[static_cast<std::size_t>(i) % bases.size()].table;
    const std::size_t a = base.size(), n = a + 1 + static_cast<std::size_t>(i % 2);
    std::vector<Element> r(n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(a - 1));
    for (std::size_t x = 0; x < n; ++x) r[x] = x < a ? static_cast<Element>(x) : pick(rng);
    const auto hx = preset_homology(strong_retract_extend(validate_shelf(base), n, r),
                                    HomologyKind::Shelf, 3);
    const auto ha = preset_homology(validate_shelf(base), HomologyKind::Shelf, 3);
    for (std::size_t d = 0; d <= 3; ++d) {
      std::size_t expect = ha[d].rank;
      for (std::size_t k = 0; k < d; ++k) expect += (n - a) * ha[k].rank * oracle::power(n, d - k - 1);
      CHECK(hx[d].rank == expect);
    }
  }
}

TEST_CASE("homology does not depend on the order of the tuple basis") {
  std::mt19937_64 rng(21);
  const auto ms = validate_multishelf({fixtures::exceptional3()});
  const auto cx = build_complex(ms, {{1}}, 4, true);
  std::vector<std::vector<std::size_t>> perm(5);
  for (int d = 0; d <= 3; ++d) {
    auto& p = perm[static_cast<std::size_t>(d)];
    p.resize(cx.dimension(d));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
  }
  std::vector<std::size_t> top(cx.dimension(4));
  std::iota(top.begin(), top.end(), 0);
  perm[4] = top;
  const std::vector<std::size_t> unit{0};
  for (int d = 0; d <= 3; ++d) {
    const auto below = cx.boundary(d).permuted(d == 0 ? unit : perm[static_cast<std::size_t>(d) - 1],
                                               perm[static_cast<std::size_t>(d)]);
    const auto above = cx.boundary(d + 1).permuted(perm[static_cast<std::size_t>(d)],
                                                   perm[static_cast<std::size_t>(d) + 1]);
    const auto in = smith_normal_form(above);
    const auto h = homology(cx, d);
    CHECK(h.rank == cx.dimension(d) - smith_normal_form(below).rank() - in.rank());
    CHECK(h.torsion == in.torsion());
  }
}

TEST_CASE("boundaries of two-element shelves against the dense oracle") {
  for (const auto& k : enumerate_shelves(2))
    for (int d = 1; d <= 4; ++d) {
      const auto m = boundary_matrix(validate_multishelf({k.table}), {{1}}, d, true);
      CHECK(oracle::to_dense(m) == oracle::boundary({k.table}, {1}, 2, d, true));
      CHECK(smith_normal_form(m).factors == oracle::dense_snf(oracle::to_dense(m)));
    }
}
