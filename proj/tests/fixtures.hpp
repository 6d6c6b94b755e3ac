#pragma once

#include <vector>

#include "oracles.hpp"
#include "shelfhom/chain_complex.hpp"
#include "shelfhom/distributive.hpp"

namespace fixtures {

using namespace shelfhom;

inline BinaryOpTable table(std::vector<std::vector<Element>> rows) {
  return BinaryOpTable::from_rows(rows);
}

/// The 4-element example with a triangle and an isolated vertex, shifted to 0..3.
inline BinaryOpTable paper_m() {
  return table({{0, 2, 2, 3}, {0, 1, 2, 3}, {0, 2, 2, 3}, {2, 0, 2, 3}});
}

/// x*y = y if y >= x, else the least element.
inline BinaryOpTable exceptional3() { return table({{0, 1, 2}, {0, 1, 2}, {0, 0, 2}}); }

inline BinaryOpTable affine(std::size_t n, long a, long b, long shift = 0) {
  return BinaryOpTable::from_function(n, [=](Element x, Element y) {
    const long m = static_cast<long>(n);
    return static_cast<Element>((((a * x + b * y + shift) % m) + m) % m);
  });
}

inline std::vector<std::size_t> ranks(const std::vector<HomologyGroup>& gs) {
  std::vector<std::size_t> r;
  for (const auto& g : gs) r.push_back(g.rank);
  return r;
}

inline std::vector<oracle::Group> as_oracle(const std::vector<HomologyGroup>& gs) {
  std::vector<oracle::Group> out;
  for (const auto& g : gs) out.push_back({g.rank, g.torsion});
  return out;
}

inline bool has_torsion(const std::vector<HomologyGroup>& gs) {
  for (const auto& g : gs)
    if (!g.torsion.empty()) return true;
  return false;
}

}  // namespace fixtures
