#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "shelfhom/chain_complex.hpp"
#include "shelfhom/distributive.hpp"

namespace shelfhom {

/// Strictly increasing vertex list; dimension = size - 1.
using Simplex = std::vector<Element>;

/// Face-closed set of simplices on the vertices 0..n-1, stored per dimension in
/// lexicographic order. Orientation of a simplex follows the vertex order.
class ShelfComplex {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  /// Highest dimension that was searched.
  int max_dimension() const noexcept { return max_dim_; }
  /// Searched through dimension n-1, so no simplex can be missing.
  bool complete() const noexcept { return max_dim_ + 1 >= static_cast<int>(n_); }

  const std::vector<Simplex>& simplices(int dim) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::size_t simplex_count() const noexcept;

  /// Faces that had to be added after construction; empty for every shelf seen so far.
  const std::vector<Simplex>& missing_faces() const noexcept { return missing_faces_; }

  /// Simplices not a proper face of another stored simplex, lexicographic.
  std::vector<Simplex> maximal_simplices() const;

  /// Closure of the given simplices; each is sorted and deduplicated first.
  static ShelfComplex from_simplices(std::size_t n, const std::vector<Simplex>& generators,
                                     int max_dim);

 private:
  friend ShelfComplex build_shelf_complex(const Shelf&, std::optional<int>, std::size_t);
  void insert(Simplex s);
  void close_faces(bool record_missing);

  std::size_t n_ = 0;
  int max_dim_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<Simplex> missing_faces_;
};

/// Vertex sets of the suffix products (x0*...*xd, x1*...*xd, ..., xd) over all tuples
/// whose products are pairwise distinct, d <= maxdim (default n-1). Missing faces are added
/// afterwards and recorded in missing_faces(). Throws CapExceeded if n^(maxdim+1) > cap.
ShelfComplex build_shelf_complex(const Shelf& shelf, std::optional<int> maxdim = std::nullopt,
                                 std::size_t cap = kDefaultBasisCap);

struct ComponentLabels {
  std::size_t count = 0;
  /// Component of each vertex, numbered by smallest vertex.
  std::vector<std::size_t> label;
};

/// Connected components of the 1-skeleton.
ComponentLabels components(const ShelfComplex& cx);

/// Oriented simplicial boundary from dimension d to d-1 (0 x #vertices for d = 0).
SparseIntMatrix simplicial_boundary(const ShelfComplex& cx, int dim);

/// Unreduced simplicial homology. Needs d+1 <= max_dimension() unless the complex is complete.
HomologyGroup simplicial_homology(const ShelfComplex& cx, int degree);

}  // namespace shelfhom
