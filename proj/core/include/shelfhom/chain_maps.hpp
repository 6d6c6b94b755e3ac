#pragma once

#include "shelfhom/chain_complex.hpp"
#include "shelfhom/simplicial.hpp"

namespace shelfhom {

/// Basis map (x0, ..., xd) -> (x0*...*xd, x1*...*xd, ..., xd) with left-normed products
/// of `op`, as a square matrix on C_d = Z[X^(d+1)].
SparseIntMatrix suffix_product_matrix(const BinaryOpTable& op, int degree);

/// F^{star1} in degree d from `source` to `target`, checked to commute with the boundaries
/// in degrees d and d+1 that both complexes carry. Throws ChainMapViolation when star1 is
/// not mutually distributive with the target ops or the square fails to commute (the
/// source must use the ops star1 composed with the target's ops).
SparseIntMatrix f_chain_map(const BinaryOpTable& star1, const ChainComplex& source,
                            const ChainComplex& target, int degree);

/// Chain map from the shelf complex C_d(X) (unaugmented) into the oriented simplicial
/// chains of S(X): tuples with repeated suffix products go to 0, the rest to the sorted
/// simplex times the sign of the sorting permutation. Checked against the boundaries;
/// InternalError if the square fails to commute.
SparseIntMatrix simplicial_projection_map(const Shelf& shelf, const ShelfComplex& cx,
                                          int degree);

}  // namespace shelfhom
