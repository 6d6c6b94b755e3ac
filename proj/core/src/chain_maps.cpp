#include "shelfhom/chain_maps.hpp"

#include <algorithm>

namespace shelfhom {

SparseIntMatrix suffix_product_matrix(const BinaryOpTable& op, int degree) {
  if (degree < 0) throw DegreeNegative("chain map degree must be nonnegative");
  const std::size_t n = op.size();
  const std::size_t len = static_cast<std::size_t>(degree) + 1;
  const auto total = checked_power(n, len);
  if (!total) throw CapExceeded("chain map too large");
  std::vector<Triplet> trips;
  trips.reserve(*total);
  std::vector<Element> image(len);
  for (std::size_t col = 0; col < *total; ++col) {
    const auto t = index_tuple(col, n, len);
    for (std::size_t k = 0; k < len; ++k)
      image[k] = left_normed_product(op, std::span(t).subspan(k));
    trips.push_back({basis_index(image, n), col, 1});
  }
  return SparseIntMatrix::from_triplets(*total, *total, std::move(trips));
}

SparseIntMatrix f_chain_map(const BinaryOpTable& star1, const ChainComplex& source,
                            const ChainComplex& target, int degree) {
  if (source.is_quotient() || target.is_quotient())
    throw ChainMapViolation("F maps between full tuple complexes only");
  if (source.carrier_size() != star1.size() || target.carrier_size() != star1.size())
    throw ChainMapViolation("carrier sizes of the complexes and the op differ");
  if (source.augmented() != target.augmented())
    throw ChainMapViolation("source and target must agree on augmentation");
  if (degree < 0 || degree > source.max_degree() || degree > target.max_degree())
    throw DegreeOutOfRange("degree outside the complexes");
  for (const auto& op : target.ops())
    if (!mutually_distributive(star1, op) || !mutually_distributive(op, star1))
      throw ChainMapViolation("star1 is not mutually distributive with every target op");

  const auto f = suffix_product_matrix(star1, degree);
  auto check = [&](int d, const SparseIntMatrix& fd, const SparseIntMatrix& below) {
    if (!(target.boundary(d) * fd == below * source.boundary(d)))
      throw ChainMapViolation("F does not commute with the boundaries in degree " +
                              std::to_string(d));
  };
  if (degree == 0) {
    // Below degree 0 both complexes carry Z (augmented) or nothing; F is the identity there.
    check(0, f, SparseIntMatrix::identity(target.boundary(0).rows()));
  } else {
    check(degree, f, suffix_product_matrix(star1, degree - 1));
  }
  if (degree + 1 <= source.max_degree() && degree + 1 <= target.max_degree())
    check(degree + 1, suffix_product_matrix(star1, degree + 1), f);
  return f;
}

namespace {

SparseIntMatrix projection_raw(const Shelf& shelf, const ShelfComplex& cx, int degree) {
  const std::size_t n = shelf.size();
  const std::size_t len = static_cast<std::size_t>(degree) + 1;
  const auto total = checked_power(n, len);
  if (!total) throw CapExceeded("projection map too large");
  std::vector<Triplet> trips;
  std::vector<Element> image(len);
  for (std::size_t col = 0; col < *total; ++col) {
    const auto t = index_tuple(col, n, len);
    for (std::size_t k = 0; k < len; ++k)
      image[k] = left_normed_product(shelf.table(), std::span(t).subspan(k));
    // Sign of the sorting permutation via inversion count; repeats give zero.
    std::size_t inversions = 0;
    bool repeated = false;
    for (std::size_t a = 0; a < len && !repeated; ++a)
      for (std::size_t b = a + 1; b < len; ++b) {
        if (image[a] == image[b]) {
          repeated = true;
          break;
        }
        if (image[a] > image[b]) ++inversions;
      }
    if (repeated) continue;
    Simplex s(image);
    std::sort(s.begin(), s.end());
    const auto row = cx.index_of(s);
    if (!row) throw InternalError("image simplex missing from the shelf complex");
    trips.push_back({*row, col, inversions % 2 == 0 ? 1 : -1});
  }
  return SparseIntMatrix::from_triplets(cx.simplices(degree).size(), *total, std::move(trips));
}

}  // namespace

SparseIntMatrix simplicial_projection_map(const Shelf& shelf, const ShelfComplex& cx,
                                          int degree) {
  if (degree < 0) throw DegreeNegative("projection degree must be nonnegative");
  if (degree > cx.max_dimension() && !cx.complete())
    throw DegreeOutOfRange("shelf complex was not built up to dimension " +
                           std::to_string(degree));
  auto phi = projection_raw(shelf, cx, degree);
  if (degree >= 1) {
    const auto d = boundary_matrix(MultiShelf::from_shelf(shelf), {{1}}, degree, false);
    if (!(simplicial_boundary(cx, degree) * phi == projection_raw(shelf, cx, degree - 1) * d))
      throw InternalError("projection to the shelf complex is not a chain map in degree " +
                          std::to_string(degree));
  }
  return phi;
}

}  // namespace shelfhom
