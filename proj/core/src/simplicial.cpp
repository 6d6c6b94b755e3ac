#include "shelfhom/simplicial.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include "shelfhom/orbits.hpp"

namespace shelfhom {

const std::vector<Simplex>& ShelfComplex::simplices(int dim) const {
  static const std::vector<Simplex> kNone;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> ShelfComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t ShelfComplex::simplex_count() const noexcept {
  std::size_t total = 0;
  for (const auto& d : by_dim_) total += d.size();
  return total;
}

void ShelfComplex::insert(Simplex s) {
  const std::size_t dim = s.size() - 1;
  if (index_[dim].emplace(s, 0).second) by_dim_[dim].push_back(std::move(s));
}

void ShelfComplex::close_faces(bool record_missing) {
  for (std::size_t dim = by_dim_.size(); dim-- > 1;) {
    for (const auto& s : std::vector<Simplex>(by_dim_[dim])) {
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != skip) face.push_back(s[i]);
        if (index_[dim - 1].count(face)) continue;
        if (record_missing) {
          std::clog << "warning: shelf complex is missing a face of dimension " << dim - 1
                    << "; inserting it\n";
          missing_faces_.push_back(face);
        }
        insert(std::move(face));
      }
    }
  }
  for (std::size_t dim = 0; dim < by_dim_.size(); ++dim) {
    std::sort(by_dim_[dim].begin(), by_dim_[dim].end());
    for (std::size_t i = 0; i < by_dim_[dim].size(); ++i) index_[dim][by_dim_[dim][i]] = i;
  }
}

std::vector<Simplex> ShelfComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t dim = 0; dim < by_dim_.size(); ++dim) {
    for (const auto& s : by_dim_[dim]) {
      bool maximal = true;
      if (dim + 1 < by_dim_.size()) {
        for (const auto& t : by_dim_[dim + 1])
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
      }
      if (maximal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShelfComplex ShelfComplex::from_simplices(std::size_t n, const std::vector<Simplex>& generators,
                                          int max_dim) {
  if (max_dim < 0) throw DegreeNegative("maximum dimension must be nonnegative");
  ShelfComplex cx;
  cx.n_ = n;
  cx.max_dim_ = max_dim;
  cx.by_dim_.resize(static_cast<std::size_t>(max_dim) + 1);
  cx.index_.resize(cx.by_dim_.size());
  for (Element v = 0; v < n; ++v) cx.insert({v});
  for (auto s : generators) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty() || s.back() >= n) throw OutOfRange("simplex vertex outside the carrier");
    if (s.size() > cx.by_dim_.size()) throw DegreeOutOfRange("simplex above maximum dimension");
    cx.insert(std::move(s));
  }
  cx.close_faces(false);
  return cx;
}

ShelfComplex build_shelf_complex(const Shelf& shelf, std::optional<int> maxdim,
                                 std::size_t cap) {
  const std::size_t n = shelf.size();
  const int top = maxdim.value_or(static_cast<int>(n) - 1);
  if (top < 0) throw DegreeNegative("maximum dimension must be nonnegative");
  const auto need = checked_power(n, static_cast<std::size_t>(top) + 1);
  if (!need || *need > cap)
    throw CapExceeded("shelf complex search up to dimension " + std::to_string(top) +
                      " exceeds the cap of " + std::to_string(cap) + " tuples");

  ShelfComplex cx;
  cx.n_ = n;
  cx.max_dim_ = top;
  cx.by_dim_.resize(static_cast<std::size_t>(top) + 1);
  cx.index_.resize(cx.by_dim_.size());
  // Only tuples of length <= n can have distinct suffix products.
  const int searched = std::min(top, static_cast<int>(n) - 1);
  std::vector<Element> products;
  for (int d = 0; d <= searched; ++d) {
    const std::size_t len = static_cast<std::size_t>(d) + 1;
    const std::size_t total = *checked_power(n, len);
    for (std::size_t i = 0; i < total; ++i) {
      const auto t = index_tuple(i, n, len);
      products.clear();
      for (std::size_t k = 0; k < len; ++k)
        products.push_back(left_normed_product(shelf.table(), std::span(t).subspan(k)));
      std::sort(products.begin(), products.end());
      if (std::adjacent_find(products.begin(), products.end()) != products.end()) continue;
      cx.insert(products);
    }
  }
  cx.close_faces(true);
  return cx;
}

ComponentLabels components(const ShelfComplex& cx) {
  UnionFind uf(cx.vertex_count());
  for (const auto& e : cx.simplices(1)) uf.unite(e[0], e[1]);
  std::vector<std::size_t> roots(cx.vertex_count());
  for (std::size_t v = 0; v < roots.size(); ++v) roots[v] = uf.find(v);
  OrbitPartition p(std::move(roots));
  ComponentLabels out;
  out.count = p.count();
  for (Element v = 0; v < cx.vertex_count(); ++v) out.label.push_back(p.block_of(v));
  return out;
}

SparseIntMatrix simplicial_boundary(const ShelfComplex& cx, int dim) {
  if (dim < 0) throw DegreeNegative("simplicial boundary degree must be nonnegative");
  const auto& cols = cx.simplices(dim);
  if (dim == 0) return SparseIntMatrix(0, cols.size());
  const auto& rows = cx.simplices(dim - 1);
  std::vector<Triplet> trips;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& s = cols[c];
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      const auto r = cx.index_of(face);
      if (!r) throw InternalError("shelf complex is not closed under faces");
      trips.push_back({*r, c, skip % 2 == 0 ? 1 : -1});
    }
  }
  return SparseIntMatrix::from_triplets(rows.size(), cols.size(), std::move(trips));
}

HomologyGroup simplicial_homology(const ShelfComplex& cx, int degree) {
  if (degree < 0 || (degree + 1 > cx.max_dimension() && !cx.complete()))
    throw DegreeOutOfRange("simplicial homology in degree " + std::to_string(degree) +
                           " needs simplices up to dimension " + std::to_string(degree + 1));
  const auto in = smith_normal_form(simplicial_boundary(cx, degree));
  const auto out = smith_normal_form(simplicial_boundary(cx, degree + 1));
  HomologyGroup h;
  h.degree = degree;
  h.rank = cx.simplices(degree).size() - in.rank() - out.rank();
  h.torsion = out.torsion();
  return h;
}

}  // namespace shelfhom
