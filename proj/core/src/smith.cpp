#include "shelfhom/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace shelfhom {
namespace {

struct Overflow {};

// Arithmetic policy: checked int64 or GMP.
struct Int64Ops {
  using T = std::int64_t;
  static T from(const Integer& v) {
    if (!v.fits_slong_p()) throw Overflow{};
    return v.get_si();
  }
  static Integer to(T v) { return Integer(static_cast<long>(v)); }
  static T abs(T v) {
    if (v == std::numeric_limits<T>::min()) throw Overflow{};
    return v < 0 ? -v : v;
  }
  static T quot(T a, T b) { return a / b; }
  // a - q * b
  static T sub_mul(T a, T q, T b) {
    T p, r;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
    return r;
  }
  static bool is_zero(T v) { return v == 0; }
  static bool is_unit(T v) { return v == 1 || v == -1; }
};

struct BigOps {
  using T = Integer;
  static T from(const Integer& v) { return v; }
  static Integer to(const T& v) { return v; }
  static T abs(const T& v) { return T(::abs(v)); }
  static T quot(const T& a, const T& b) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static T sub_mul(const T& a, const T& q, const T& b) { return a - q * b; }
  static bool is_zero(const T& v) { return sgn(v) == 0; }
  static bool is_unit(const T& v) { return v == 1 || v == -1; }
};

template <class Ops>
class Eliminator {
  using T = typename Ops::T;
  struct Entry {
    std::uint32_t row;
    T value;
  };
  using Column = std::vector<Entry>;

 public:
  explicit Eliminator(const SparseIntMatrix& m) : cols_(m.cols()), row_cols_(m.rows()) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (const auto& e : m.column(c)) {
        cols_[c].push_back({e.row, Ops::from(e.value)});
        row_cols_[e.row].push_back(static_cast<std::uint32_t>(c));
      }
    }
  }

  std::vector<Integer> run() {
    std::vector<Integer> diagonal;
    std::size_t r, c;
    while (find_pivot(r, c)) {
      if (!reduce(r, c)) continue;
      diagonal.push_back(Ops::to(Ops::abs(lookup(cols_[c], r)->value)));
      retire(r, c);
    }
    return diagonal;
  }

 private:
  static const Entry* lookup(const Column& col, std::size_t r) {
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const Entry& e, std::size_t row) { return e.row < row; });
    return it != col.end() && it->row == r ? &*it : nullptr;
  }

  // Drops stale and repeated column ids from the occupancy list of row r.
  std::vector<std::uint32_t>& live_columns(std::size_t r) {
    auto& ids = row_cols_[r];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    ids.erase(std::remove_if(ids.begin(), ids.end(),
                             [&](std::uint32_t c) { return lookup(cols_[c], r) == nullptr; }),
              ids.end());
    return ids;
  }

  bool find_pivot(std::size_t& pr, std::size_t& pc) {
    // A unit is always of least absolute value, so the first row holding one wins.
    while (low_ < row_cols_.size() && live_columns(low_).empty()) ++low_;
    if (low_ == row_cols_.size()) return false;
    for (std::size_t r = low_; r < row_cols_.size(); ++r) {
      for (auto c : live_columns(r)) {
        if (Ops::is_unit(lookup(cols_[c], r)->value)) {
          pr = r;
          pc = c;
          return true;
        }
      }
    }
    bool found = false;
    T best{};
    for (std::size_t r = low_; r < row_cols_.size(); ++r) {
      for (auto c : live_columns(r)) {
        T a = Ops::abs(lookup(cols_[c], r)->value);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    return found;
  }

  // col_j -= q * col_c, keeping row occupancy up to date.
  void axpy(std::size_t j, const T& q, std::size_t c) {
    const Column& src = cols_[c];
    Column& dst = cols_[j];
    Column out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
      if (b == src.size() || (a < dst.size() && dst[a].row < src[b].row)) {
        out.push_back(std::move(dst[a++]));
      } else if (a == dst.size() || src[b].row < dst[a].row) {
        T v = Ops::sub_mul(T(0), q, src[b].value);
        row_cols_[src[b].row].push_back(static_cast<std::uint32_t>(j));
        out.push_back({src[b].row, std::move(v)});
        ++b;
      } else {
        T v = Ops::sub_mul(dst[a].value, q, src[b].value);
        if (!Ops::is_zero(v)) out.push_back({dst[a].row, std::move(v)});
        ++a;
        ++b;
      }
    }
    dst = std::move(out);
  }

  // One reduction round at pivot (r, c). True when the pivot divides its row and column.
  bool reduce(std::size_t r, std::size_t c) {
    const T v = lookup(cols_[c], r)->value;
    bool exact = true;
    const std::vector<std::uint32_t> others = live_columns(r);
    for (auto j : others) {
      if (j == c) continue;
      const T e = lookup(cols_[j], r)->value;
      const T q = Ops::quot(e, v);
      if (!Ops::is_zero(Ops::sub_mul(e, q, v))) exact = false;
      if (!Ops::is_zero(q)) axpy(j, q, c);
    }
    if (!exact) return false;
    // Row r now holds only the pivot, so row operations against it touch column c alone.
    bool divides = true;
    Column& col = cols_[c];
    Column kept;
    for (auto& e : col) {
      if (e.row == r) {
        kept.push_back(std::move(e));
        continue;
      }
      T rem = Ops::sub_mul(e.value, Ops::quot(e.value, v), v);
      if (!Ops::is_zero(rem)) {
        divides = false;
        kept.push_back({e.row, std::move(rem)});
      }
    }
    col = std::move(kept);
    return divides;
  }

  void retire(std::size_t r, std::size_t c) {
    cols_[c].clear();
    row_cols_[r].clear();
  }

  std::vector<Column> cols_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::size_t low_ = 0;
};

template <class Ops>
SmithForm run_elimination(const SparseIntMatrix& m) {
  Eliminator<Ops> e(m);
  return {diagonal_to_invariant_factors(e.run())};
}

}  // namespace

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

std::vector<Integer> diagonal_to_invariant_factors(std::vector<Integer> diagonal) {
  std::vector<Integer> units;
  std::vector<Integer> rest;
  for (auto& d : diagonal) {
    d = abs(d);
    if (d == 0) continue;
    (d == 1 ? units : rest).push_back(std::move(d));
  }
  // Pairwise (gcd, lcm) exchanges keep every prime's multiset of exponents; sweeping i
  // against all later j leaves the gcd of the remaining entries at position i.
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g = gcd(rest[i], rest[j]);
      if (g == rest[i]) continue;
      Integer l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  for (auto& d : rest)
    if (d == 1) units.push_back(d);
  std::erase_if(rest, [](const Integer& d) { return d == 1; });
  std::sort(rest.begin(), rest.end());
  units.insert(units.end(), rest.begin(), rest.end());
  return units;
}

SmithForm smith_normal_form(const SparseIntMatrix& m) {
  try {
    return run_elimination<Int64Ops>(m);
  } catch (const Overflow&) {
    return run_elimination<BigOps>(m);
  }
}

SmithForm smith_normal_form_bigint(const SparseIntMatrix& m) { return run_elimination<BigOps>(m); }

}  // namespace shelfhom
