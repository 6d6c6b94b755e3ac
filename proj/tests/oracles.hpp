// Reference implementations used only by the tests. They share no code with the library
// beyond the table and matrix containers: everything is dense and written for clarity.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "shelfhom/op_table.hpp"
#include "shelfhom/sparse_matrix.hpp"

namespace oracle {

using shelfhom::BinaryOpTable;
using shelfhom::Element;
using Dense = std::vector<std::vector<mpz_class>>;

inline bool is_shelf(const std::vector<Element>& t, std::size_t n) {
  auto op = [&](std::size_t x, std::size_t y) { return t[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (op(op(x, y), z) != op(op(x, z), op(y, z))) return false;
  return true;
}

inline bool mutually_distributive(const BinaryOpTable& a, const BinaryOpTable& b) {
  const auto n = a.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        if (b(a(x, y), z) != a(b(x, z), b(y, z))) return false;
        if (a(b(x, y), z) != b(a(x, z), a(y, z))) return false;
      }
  return true;
}

/// Every labeled shelf on n elements, by filtering all n^(n^2) tables.
inline std::vector<std::vector<Element>> all_labeled_shelves(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> t(n * n, 0);
  while (true) {
    if (is_shelf(t, n)) out.push_back(t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == n) t[i++] = 0;
    if (i == t.size()) break;
  }
  return out;
}

/// Lexicographically least relabeling, tried over every permutation.
inline std::vector<Element> min_relabeling(const std::vector<Element>& t, std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Element> best;
  do {
    std::vector<Element> r(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) r[p[x] * n + p[y]] = p[t[x * n + y]];
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::set<std::vector<Element>> shelf_classes(std::size_t n) {
  std::set<std::vector<Element>> out;
  for (const auto& t : all_labeled_shelves(n)) out.insert(min_relabeling(t, n));
  return out;
}

inline Dense to_dense(const shelfhom::SparseIntMatrix& m) {
  Dense d(m.rows(), std::vector<mpz_class>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) d[e.row][c] = e.value;
  return d;
}

/// Diagonal of the Smith form by plain row/column reduction; positive, divisibility chain.
inline std::vector<mpz_class> dense_snf(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block moves to (t, t).
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the rest; otherwise fold an offending row in and retry.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

inline mpz_class determinant(Dense m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// s_k = D_k / D_{k-1}, D_k the gcd of all k x k minors. Small matrices only.
inline std::vector<mpz_class> minor_gcd_factors(const Dense& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        Dense sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) sub.back().push_back(a[i][j]);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(determinant(sub)).get_mpz_t());
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline std::size_t power(std::size_t b, std::size_t e) {
  std::size_t p = 1;
  while (e--) p *= b;
  return p;
}

/// The tuple with index i in C_d, leftmost coordinate most significant.
inline std::vector<Element> tuple_of(std::size_t i, std::size_t n, std::size_t len) {
  std::vector<Element> t(len);
  for (std::size_t k = len; k-- > 0;) {
    t[k] = static_cast<Element>(i % n);
    i /= n;
  }
  return t;
}

inline std::size_t index_of(const std::vector<Element>& t, std::size_t n) {
  std::size_t i = 0;
  for (auto v : t) i = i * n + v;
  return i;
}

/// d_d(x_0..x_d) = sum_k c_k sum_i (-1)^i (x_0 *k x_i, ..., x_{i-1} *k x_i, x_{i+1}, ..., x_d).
inline Dense boundary(const std::vector<BinaryOpTable>& ops, const std::vector<std::int64_t>& c,
                      std::size_t n, int degree, bool augmented) {
  if (degree == 0) {
    Dense m(augmented ? 1 : 0, std::vector<mpz_class>(n, 0));
    if (augmented)
      for (auto& v : m[0]) v = 1;
    return m;
  }
  const auto d = static_cast<std::size_t>(degree);
  Dense m(power(n, d), std::vector<mpz_class>(power(n, d + 1), 0));
  for (std::size_t col = 0; col < power(n, d + 1); ++col) {
    const auto x = tuple_of(col, n, d + 1);
    for (std::size_t k = 0; k < ops.size(); ++k)
      for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Element> face;
        for (std::size_t j = 0; j < i; ++j) face.push_back(ops[k](x[j], x[i]));
        for (std::size_t j = i + 1; j <= d; ++j) face.push_back(x[j]);
        m[index_of(face, n)][col] += (i % 2 ? -1 : 1) * c[k];
      }
  }
  return m;
}

struct Group {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
  friend bool operator==(const Group&, const Group&) = default;
};

/// H_d = ker d_d / im d_{d+1} from dense Smith forms.
inline Group homology(const Dense& d_above, const Dense& d_below, std::size_t dim) {
  const auto above = dense_snf(d_above);
  const auto below = dense_snf(d_below);
  Group g;
  g.rank = dim - above.size() - below.size();
  for (const auto& s : above)
    if (s > 1) g.torsion.push_back(s);
  return g;
}

/// Shelf-style homology in degrees 0..maxdeg.
inline std::vector<Group> homology(const std::vector<BinaryOpTable>& ops,
                                   const std::vector<std::int64_t>& c, std::size_t n, int maxdeg,
                                   bool augmented) {
  std::vector<Group> gs;
  for (int d = 0; d <= maxdeg; ++d)
    gs.push_back(homology(boundary(ops, c, n, d + 1, augmented), boundary(ops, c, n, d, augmented),
                          power(n, static_cast<std::size_t>(d) + 1)));
  return gs;
}

inline bool degenerate(const std::vector<Element>& t) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i] == t[i + 1]) return true;
  return false;
}

/// Homology of C / D for D spanned by tuples with an adjacent repeat (unaugmented).
inline std::vector<Group> quotient_homology(const std::vector<BinaryOpTable>& ops,
                                            const std::vector<std::int64_t>& c, std::size_t n,
                                            int maxdeg) {
  auto restrict_to = [&](const Dense& full, std::size_t in_len, std::size_t out_len) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < power(n, out_len); ++i)
      if (!degenerate(tuple_of(i, n, out_len))) rows.push_back(i);
    for (std::size_t i = 0; i < power(n, in_len); ++i)
      if (!degenerate(tuple_of(i, n, in_len))) cols.push_back(i);
    Dense m(rows.size(), std::vector<mpz_class>(cols.size(), 0));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (!full.empty()) m[i][j] = full[rows[i]][cols[j]];
    return std::pair{m, cols.size()};
  };
  std::vector<Group> gs;
  for (int d = 0; d <= maxdeg; ++d) {
    const auto len = static_cast<std::size_t>(d) + 1;
    const auto [below, dim] = restrict_to(boundary(ops, c, n, d, false), len, len - 1);
    const auto above = restrict_to(boundary(ops, c, n, d + 1, false), len + 1, len).first;
    gs.push_back(homology(above, below, dim));
  }
  return gs;
}

inline Dense random_dense(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range,
                          double density = 0.6) {
  std::uniform_int_distribution<int> val(-range, range);
  std::bernoulli_distribution keep(density);
  Dense m(rows, std::vector<mpz_class>(cols, 0));
  for (auto& r : m)
    for (auto& v : r)
      if (keep(rng)) v = val(rng);
  return m;
}

}  // namespace oracle
