#include "shelfhom/orbits.hpp"

#include <map>

namespace shelfhom {

OrbitPartition::OrbitPartition(std::vector<std::size_t> block_of) {
  // Renumber so blocks are ordered by smallest member.
  std::map<std::size_t, std::size_t> renumber;
  block_of_.resize(block_of.size());
  for (std::size_t x = 0; x < block_of.size(); ++x) {
    auto [it, inserted] = renumber.try_emplace(block_of[x], blocks_.size());
    if (inserted) blocks_.emplace_back();
    block_of_[x] = it->second;
    blocks_[it->second].push_back(static_cast<Element>(x));
  }
}

OrbitPartition left_orbits(const BinaryOpTable& table) {
  const std::size_t n = table.size();
  UnionFind uf(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) uf.unite(x, table(y, x));
  std::vector<std::size_t> roots(n);
  for (std::size_t x = 0; x < n; ++x) roots[x] = uf.find(x);
  return OrbitPartition(std::move(roots));
}

OrbitPartition left_orbits(const Shelf& shelf) { return left_orbits(shelf.table()); }

OrbitQuotient orbit_quotient(const Shelf& shelf) {
  const auto orbits = left_orbits(shelf);
  const std::size_t r = orbits.count();
  std::vector<Element> proj(shelf.size());
  for (Element x = 0; x < shelf.size(); ++x) proj[x] = static_cast<Element>(orbits.block_of(x));

  // The product descends; read it off representatives and confirm it on every pair.
  std::vector<Element> induced(r * r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      induced[a * r + b] = proj[shelf(orbits.representative(a), orbits.representative(b))];
  for (Element x = 0; x < shelf.size(); ++x)
    for (Element y = 0; y < shelf.size(); ++y)
      if (proj[shelf(x, y)] != induced[proj[x] * r + proj[y]])
        throw InternalError("orbit projection is not a homomorphism");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (induced[a * r + b] != b) throw InternalError("induced orbit product is not [x]*[y]=[y]");

  return {validate_shelf(BinaryOpTable(r, std::move(induced))), std::move(proj)};
}

}  // namespace shelfhom
