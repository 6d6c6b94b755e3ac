#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "shelfhom/distributive.hpp"

namespace shelfhom {

/// Path-halving union-find with union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Partition of {0..n-1} into blocks. Blocks are ordered by their smallest element, which
/// is also the block representative.
class OrbitPartition {
 public:
  OrbitPartition() = default;
  explicit OrbitPartition(std::vector<std::size_t> block_of);

  std::size_t carrier_size() const noexcept { return block_of_.size(); }
  std::size_t count() const noexcept { return blocks_.size(); }
  std::size_t block_of(Element x) const { return block_of_.at(x); }
  const std::vector<Element>& block(std::size_t b) const { return blocks_.at(b); }
  Element representative(std::size_t b) const { return blocks_.at(b).front(); }
  const std::vector<std::vector<Element>>& blocks() const noexcept { return blocks_; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<Element>> blocks_;
};

/// Finest partition with x ~ y*x for all x, y.
OrbitPartition left_orbits(const Shelf& shelf);
OrbitPartition left_orbits(const BinaryOpTable& table);

struct OrbitQuotient {
  Shelf quotient;
  /// Element x of the shelf maps to block projection[x] of the quotient.
  std::vector<Element> projection;
};

/// Quotient by left orbits. The induced product is [x]*[y] = [y]; both that and the
/// homomorphism property of the projection are checked and raise InternalError on failure.
OrbitQuotient orbit_quotient(const Shelf& shelf);

}  // namespace shelfhom
