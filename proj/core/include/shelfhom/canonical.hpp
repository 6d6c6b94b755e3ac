#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "shelfhom/distributive.hpp"

namespace shelfhom {

/// Lexicographically least relabeling of a table. Equal keys iff isomorphic tables.
struct IsoClassKey {
  BinaryOpTable table;

  friend bool operator==(const IsoClassKey&, const IsoClassKey&) = default;
  friend auto operator<=>(const IsoClassKey& a, const IsoClassKey& b) {
    return a.table <=> b.table;
  }
};

inline constexpr std::size_t kCanonicalSizeLimit = 8;
inline constexpr std::size_t kEnumerationSizeLimit = 5;

/// Table of x*y relabeled by p: entry (p(x), p(y)) is p(x*y).
BinaryOpTable relabel(const BinaryOpTable& table, const std::vector<Element>& permutation);

/// Minimum over all n! relabelings; throws PracticalSizeLimit for n > 8.
IsoClassKey canonical_form(const BinaryOpTable& table);

/// Every shelf of size n up to isomorphism, sorted by key. Throws PracticalSizeLimit for
/// n > 5. `jobs` > 1 splits the search by the value of the (0,0) entry.
std::vector<IsoClassKey> enumerate_shelves(std::size_t n, std::size_t jobs = 1);

/// Number of labeled shelf tables visited on the way; exposed for diagnostics and tests.
std::size_t count_labeled_shelves(std::size_t n);

}  // namespace shelfhom
