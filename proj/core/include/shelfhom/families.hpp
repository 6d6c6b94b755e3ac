#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "shelfhom/distributive.hpp"

namespace shelfhom {

/// Subset of a finite ground set Omega, bit i set iff i is a member.
using SubsetMask = std::uint32_t;

namespace family {

/// x*y = f(x)
struct ConstLeft {
  std::vector<Element> f;
};

/// x*y = g(y), requires g o g = g.
struct IdempotentRight {
  std::vector<Element> g;
};

/// x*y = x if y in A, y otherwise.
struct SubsetSwitch {
  std::size_t n = 0;
  std::vector<Element> subset;
};

/// b*y = g(y), x*y = y for x != b. Requires the preimage of b under g to be {b}.
struct PointedMap {
  Element b = 0;
  std::vector<Element> g;
};

/// Carrier split into blocks A_i, x*y = g_i(y) for x in A_i. Requires g_i(A_j) in A_j and
/// g_i = g_j o g_i on A_j for all i, j.
struct PartitionFamily {
  std::vector<std::vector<Element>> blocks;
  std::vector<std::vector<Element>> maps;
};

/// Members of the family, in the given order, become carrier elements 0..m-1. The family
/// must be closed under intersection.
struct IntersectionShelf {
  std::vector<SubsetMask> family;
};

/// As IntersectionShelf, with x*y = x - y; the family must be closed under difference.
struct SubtractionShelf {
  std::vector<SubsetMask> family;
};

/// Carrier 2^Omega (element index = subset mask) with ops in the order
/// identity (x*y = x), intersection, union, right-trivial (x*y = y).
struct BooleanMultiShelf {
  std::size_t omega = 0;
};

struct IdentityOp {
  std::size_t n = 0;
};

/// x*y = y
struct RightTrivialOp {
  std::size_t n = 0;
};

}  // namespace family

using FamilySpec =
    std::variant<family::ConstLeft, family::IdempotentRight, family::SubsetSwitch,
                 family::PointedMap, family::PartitionFamily, family::IntersectionShelf,
                 family::SubtractionShelf, family::BooleanMultiShelf, family::IdentityOp,
                 family::RightTrivialOp>;

using Structure = std::variant<Shelf, MultiShelf>;

/// Builds the example structure after checking the spec's preconditions eagerly; throws
/// SpecPreconditionFailed when they fail. BooleanMultiShelf yields a MultiShelf, all others
/// a Shelf.
Structure construct_family(const FamilySpec& spec);

Shelf make_shelf(const FamilySpec& spec);
MultiShelf make_multishelf(const FamilySpec& spec);

}  // namespace shelfhom
