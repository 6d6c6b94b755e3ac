#pragma once

#include <cstddef>
#include <vector>

#include "shelfhom/sparse_matrix.hpp"

namespace shelfhom {

/// Invariant factors s_1 | s_2 | ... | s_r, all positive. r is the rank.
struct SmithForm {
  std::vector<Integer> factors;

  std::size_t rank() const noexcept { return factors.size(); }
  /// Factors greater than one.
  std::vector<Integer> torsion() const;
};

/// Elementary divisors of m over the integers.
///
/// Sparse elimination: each round takes a nonzero entry of least absolute value (ties go to
/// the lowest row, then the lowest column), reduces its row and column by it, and keeps any
/// nonzero remainders for the next round. A pivot is retired once it divides everything in
/// its row and column. The retired pivots form a diagonal matrix equivalent to m, which is
/// then brought into divisibility order with gcd/lcm exchanges. Arithmetic runs in checked
/// 64-bit integers and restarts in GMP integers on overflow.
SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Same, but always in GMP arithmetic. Exposed so tests can compare both paths.
SmithForm smith_normal_form_bigint(const SparseIntMatrix& m);

/// Turns a list of nonzero diagonal entries into the invariant factor chain.
std::vector<Integer> diagonal_to_invariant_factors(std::vector<Integer> diagonal);

}  // namespace shelfhom
