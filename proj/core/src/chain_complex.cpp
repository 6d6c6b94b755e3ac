#include "shelfhom/chain_complex.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "shelfhom/parallel.hpp"

namespace shelfhom {

std::optional<std::size_t> checked_power(std::size_t n, std::size_t k) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < k; ++i)
    if (__builtin_mul_overflow(p, n, &p)) return std::nullopt;
  return p;
}

std::size_t basis_index(std::span<const Element> tuple, std::size_t n) {
  std::size_t idx = 0;
  for (auto x : tuple) {
    if (x >= n)
      throw OutOfRange("tuple entry " + std::to_string(x) + " outside 0.." +
                       std::to_string(n - 1));
    idx = idx * n + x;
  }
  return idx;
}

std::vector<Element> index_tuple(std::size_t index, std::size_t n, std::size_t length) {
  const auto total = checked_power(n, length);
  if (n == 0 || !total || index >= *total)
    throw OutOfRange("index " + std::to_string(index) + " outside the basis of length-" +
                     std::to_string(length) + " tuples");
  std::vector<Element> t(length);
  for (std::size_t i = length; i-- > 0;) {
    t[i] = static_cast<Element>(index % n);
    index /= n;
  }
  return t;
}

bool is_degenerate(std::span<const Element> tuple) {
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    if (tuple[i] == tuple[i + 1]) return true;
  return false;
}

namespace {

using Term = std::pair<std::size_t, std::int64_t>;

// Terms of sum_k c_k sum_i (-1)^i d^k_{d,i}(t), unmerged. t has length d + 1 >= 2.
void boundary_terms(std::span<const BinaryOpTable> ops, std::span<const std::int64_t> c,
                    std::span<const Element> t, std::size_t n, std::vector<Term>& out) {
  const std::size_t len = t.size();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (c[k] == 0) continue;
    const auto& op = ops[k];
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < i; ++j) idx = idx * n + op(t[j], t[i]);
      for (std::size_t j = i + 1; j < len; ++j) idx = idx * n + t[j];
      out.emplace_back(idx, (i % 2 == 0) ? c[k] : -c[k]);
    }
  }
}

void merge_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    std::int64_t sum = 0;
    while (j < terms.size() && terms[j].first == terms[i].first) sum += terms[j++].second;
    if (sum != 0) terms[out++] = {terms[i].first, sum};
    i = j;
  }
  terms.resize(out);
}

SparseIntMatrix augmentation_row(std::size_t n, bool augmented) {
  SparseIntMatrix m(augmented ? 1 : 0, n);
  if (augmented)
    for (std::size_t x = 0; x < n; ++x) m.set_column(x, {{0, 1}});
  return m;
}

void check_cap(std::size_t n, int maxdeg, std::size_t cap) {
  if (maxdeg < 0) throw DegreeNegative("maximum degree must be nonnegative");
  const auto need = checked_power(n, static_cast<std::size_t>(maxdeg) + 2);
  if (!need || *need > cap)
    throw CapExceeded("complex of carrier size " + std::to_string(n) + " up to degree " +
                      std::to_string(maxdeg) + " exceeds the basis cap of " +
                      std::to_string(cap));
}

void check_coefficients(std::size_t ops, const CoefficientVector& c) {
  if (c.values.size() != ops)
    throw SizeMismatch("coefficient vector has " + std::to_string(c.values.size()) +
                       " entries for " + std::to_string(ops) + " operations");
}

void verify_dd(const std::vector<SparseIntMatrix>& d) {
  for (std::size_t k = 1; k < d.size(); ++k)
    if (!(d[k - 1] * d[k]).is_zero())
      throw DDNotZero("d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " != 0");
}

SparseIntMatrix boundary_from_ops(std::span<const BinaryOpTable> ops,
                                  std::span<const std::int64_t> c, std::size_t n, int degree,
                                  bool augmented) {
  if (degree < 0) throw DegreeNegative("boundary degree must be nonnegative");
  if (degree == 0) return augmentation_row(n, augmented);
  const std::size_t d = static_cast<std::size_t>(degree);
  const auto cols = checked_power(n, d + 1);
  if (!cols || *cols > std::numeric_limits<std::uint32_t>::max())
    throw CapExceeded("boundary matrix of degree " + std::to_string(degree) + " is too large");
  SparseIntMatrix m(*checked_power(n, d), *cols);
  std::vector<Element> t(d + 1, 0);
  std::vector<Term> terms;
  for (std::size_t col = 0; col < *cols; ++col) {
    terms.clear();
    boundary_terms(ops, c, t, n, terms);
    merge_terms(terms);
    SparseIntMatrix::Column entries;
    entries.reserve(terms.size());
    for (auto [row, v] : terms)
      entries.push_back({static_cast<std::uint32_t>(row), Integer(static_cast<long>(v))});
    m.set_column(col, std::move(entries));
    // Advance t to the next tuple in lexicographic order.
    for (std::size_t i = d + 1; i-- > 0;) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
  return m;
}

}  // namespace

SparseIntMatrix boundary_matrix(const MultiShelf& ms, const CoefficientVector& c, int degree,
                                bool augmented) {
  check_coefficients(ms.op_count(), c);
  return boundary_from_ops(ms.ops(), c.values, ms.size(), degree, augmented);
}

SparseIntMatrix face_matrix(const BinaryOpTable& op, int degree, std::size_t face) {
  if (degree < 1) throw DegreeNegative("face maps start in degree 1");
  if (face > static_cast<std::size_t>(degree)) throw OutOfRange("face index above degree");
  const std::size_t n = op.size();
  const std::size_t d = static_cast<std::size_t>(degree);
  const auto cols = checked_power(n, d + 1);
  if (!cols) throw CapExceeded("face matrix too large");
  std::vector<Triplet> trips;
  for (std::size_t col = 0; col < *cols; ++col) {
    const auto t = index_tuple(col, n, d + 1);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < face; ++j) idx = idx * n + op(t[j], t[face]);
    for (std::size_t j = face + 1; j <= d; ++j) idx = idx * n + t[j];
    trips.push_back({idx, col, 1});
  }
  return SparseIntMatrix::from_triplets(*checked_power(n, d), *cols, std::move(trips));
}

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s;
}

std::size_t ChainComplex::dimension(int degree) const {
  if (degree < 0 || degree > max_degree())
    throw DegreeOutOfRange("degree " + std::to_string(degree) + " outside the complex");
  return boundaries_[static_cast<std::size_t>(degree)].cols();
}

const SparseIntMatrix& ChainComplex::boundary(int degree) const {
  if (degree < 0 || degree > max_degree())
    throw DegreeOutOfRange("no boundary of degree " + std::to_string(degree));
  return boundaries_[static_cast<std::size_t>(degree)];
}

std::vector<std::size_t> ChainComplex::basis(int degree) const {
  const std::size_t dim = dimension(degree);
  if (is_quotient()) return basis_[static_cast<std::size_t>(degree)];
  std::vector<std::size_t> b(dim);
  for (std::size_t i = 0; i < dim; ++i) b[i] = i;
  return b;
}

ChainComplex build_complex(const MultiShelf& ms, const CoefficientVector& c, int maxdeg,
                           bool augmented, std::size_t cap) {
  check_coefficients(ms.op_count(), c);
  check_cap(ms.size(), maxdeg, cap);
  ChainComplex cx;
  cx.n_ = ms.size();
  cx.augmented_ = augmented;
  cx.ops_.assign(ms.ops().begin(), ms.ops().end());
  cx.coefficients_ = c;
  for (int d = 0; d <= maxdeg; ++d)
    cx.boundaries_.push_back(boundary_from_ops(cx.ops_, c.values, cx.n_, d, augmented));
  verify_dd(cx.boundaries_);
  return cx;
}

namespace {

HomologyGroup assemble(const ChainComplex& cx, int degree, const SmithForm& in,
                       const SmithForm& out) {
  HomologyGroup h;
  h.degree = degree;
  h.rank = cx.dimension(degree) - in.rank() - out.rank();
  h.torsion = out.torsion();
  return h;
}

}  // namespace

HomologyGroup homology(const ChainComplex& cx, int degree) {
  if (degree < 0) throw DegreeNegative("homology degree must be nonnegative");
  if (degree + 1 > cx.max_degree())
    throw DegreeOutOfRange("homology in degree " + std::to_string(degree) +
                           " needs boundaries up to degree " + std::to_string(degree + 1) +
                           ", complex stops at " + std::to_string(cx.max_degree()));
  return assemble(cx, degree, smith_normal_form(cx.boundary(degree)),
                  smith_normal_form(cx.boundary(degree + 1)));
}

std::vector<HomologyGroup> homology_groups(const ChainComplex& cx, std::size_t jobs) {
  const int top = cx.max_degree();
  std::vector<SmithForm> snf(static_cast<std::size_t>(top) + 1);
  parallel_for(snf.size(), jobs, [&](std::size_t d) {
    snf[d] = smith_normal_form(cx.boundary(static_cast<int>(d)));
  });
  std::vector<HomologyGroup> out;
  for (int d = 0; d < top; ++d)
    out.push_back(assemble(cx, d, snf[static_cast<std::size_t>(d)],
                           snf[static_cast<std::size_t>(d) + 1]));
  return out;
}

std::string to_string(HomologyKind kind) {
  switch (kind) {
    case HomologyKind::Shelf: return "shelf";
    case HomologyKind::Rack: return "rack";
    case HomologyKind::Quandle: return "quandle";
  }
  return "?";
}

HomologyKind parse_homology_kind(const std::string& name) {
  if (name == "shelf") return HomologyKind::Shelf;
  if (name == "rack") return HomologyKind::Rack;
  if (name == "quandle") return HomologyKind::Quandle;
  throw ParseError("unknown homology kind '" + name + "' (expected shelf, rack or quandle)");
}

bool default_augmentation(HomologyKind kind) { return kind == HomologyKind::Shelf; }

std::vector<HomologyGroup> preset_homology(const Shelf& shelf, HomologyKind kind, int maxdeg,
                                           std::optional<bool> augmented, std::size_t cap,
                                           std::size_t jobs) {
  if (maxdeg < 0) throw DegreeNegative("maximum degree must be nonnegative");
  const bool aug = augmented.value_or(default_augmentation(kind));
  switch (kind) {
    case HomologyKind::Shelf:
      return homology_groups(
          build_complex(MultiShelf::from_shelf(shelf), {{1}}, maxdeg + 1, aug, cap), jobs);
    case HomologyKind::Rack: {
      auto ms = validate_multishelf({shelf.table(), BinaryOpTable::identity(shelf.size())});
      return homology_groups(build_complex(ms, {{1, -1}}, maxdeg + 1, aug, cap), jobs);
    }
    case HomologyKind::Quandle:
      return homology_groups(quandle_quotient_complex(shelf, {{1, -1}}, maxdeg + 1, aug, cap),
                             jobs);
  }
  throw std::logic_error("unhandled homology kind");
}

ChainComplex quandle_quotient_complex(const Shelf& spindle, const CoefficientVector& c,
                                      int maxdeg, bool augmented, std::size_t cap) {
  const std::size_t n = spindle.size();
  for (Element x = 0; x < n; ++x)
    if (spindle(x, x) != x)
      throw NotASpindle("x*x != x at x = " + std::to_string(x));
  std::vector<BinaryOpTable> ops{spindle.table()};
  if (c.values.size() == 2) ops.push_back(BinaryOpTable::identity(n));
  else if (c.values.size() != 1)
    throw SizeMismatch("degenerate quotient takes coefficients for (*) or (*, identity)");
  check_cap(n, maxdeg, cap);

  ChainComplex cx;
  cx.n_ = n;
  cx.augmented_ = augmented;
  cx.ops_ = ops;
  cx.coefficients_ = c;

  // kept[d][full index] = position in the quotient basis, or npos for degenerate tuples.
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> position;
  for (int d = 0; d <= maxdeg; ++d) {
    const std::size_t len = static_cast<std::size_t>(d) + 1;
    const std::size_t total = *checked_power(n, len);
    std::vector<std::size_t> pos(total, npos);
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < total; ++i)
      if (!is_degenerate(index_tuple(i, n, len))) {
        pos[i] = basis.size();
        basis.push_back(i);
      }
    position.push_back(std::move(pos));
    cx.basis_.push_back(std::move(basis));
  }

  cx.boundaries_.push_back(augmentation_row(cx.basis_[0].size(), augmented));
  std::vector<Term> terms;
  for (int d = 1; d <= maxdeg; ++d) {
    const std::size_t len = static_cast<std::size_t>(d) + 1;
    const auto& below = position[static_cast<std::size_t>(d) - 1];
    const std::size_t total = position[static_cast<std::size_t>(d)].size();
    SparseIntMatrix m(cx.basis_[static_cast<std::size_t>(d) - 1].size(),
                      cx.basis_[static_cast<std::size_t>(d)].size());
    for (std::size_t i = 0; i < total; ++i) {
      const auto t = index_tuple(i, n, len);
      terms.clear();
      boundary_terms(ops, c.values, t, n, terms);
      merge_terms(terms);
      const std::size_t col = position[static_cast<std::size_t>(d)][i];
      if (col == npos) {
        // d(D) must stay inside D: no nondegenerate target may survive.
        for (auto [row, v] : terms)
          if (below[row] != npos)
            throw DegenerateNotSubcomplex(
                "the requested differential maps a degenerate chain of degree " +
                std::to_string(d) + " outside the degenerate subcomplex");
        continue;
      }
      SparseIntMatrix::Column entries;
      for (auto [row, v] : terms)
        if (below[row] != npos)
          entries.push_back({static_cast<std::uint32_t>(below[row]), Integer(static_cast<long>(v))});
      m.set_column(col, std::move(entries));
    }
    cx.boundaries_.push_back(std::move(m));
  }
  verify_dd(cx.boundaries_);
  return cx;
}

}  // namespace shelfhom
