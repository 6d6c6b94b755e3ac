#include "shelfhom/families.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace shelfhom {
namespace {

void check_map(const std::vector<Element>& m, const char* name) {
  if (m.empty()) throw SpecPreconditionFailed(std::string(name) + " must be nonempty");
  for (auto v : m)
    if (v >= m.size())
      throw SpecPreconditionFailed(std::string(name) + " maps outside the carrier");
}

Shelf build(const family::ConstLeft& s) {
  check_map(s.f, "f");
  return validate_shelf(BinaryOpTable::from_function(s.f.size(),
                                                     [&](Element x, Element) { return s.f[x]; }));
}

Shelf build(const family::IdempotentRight& s) {
  check_map(s.g, "g");
  for (Element x = 0; x < s.g.size(); ++x)
    if (s.g[s.g[x]] != s.g[x])
      throw SpecPreconditionFailed("g is not idempotent at " + std::to_string(x));
  return validate_shelf(BinaryOpTable::from_function(s.g.size(),
                                                     [&](Element, Element y) { return s.g[y]; }));
}

Shelf build(const family::SubsetSwitch& s) {
  if (s.n == 0) throw SpecPreconditionFailed("carrier must be nonempty");
  std::vector<bool> in(s.n, false);
  for (auto a : s.subset) {
    if (a >= s.n) throw SpecPreconditionFailed("subset element outside the carrier");
    in[a] = true;
  }
  return validate_shelf(BinaryOpTable::from_function(
      s.n, [&](Element x, Element y) { return in[y] ? x : y; }));
}

Shelf build(const family::PointedMap& s) {
  check_map(s.g, "g");
  if (s.b >= s.g.size()) throw SpecPreconditionFailed("base point outside the carrier");
  for (Element x = 0; x < s.g.size(); ++x)
    if ((s.g[x] == s.b) != (x == s.b))
      throw SpecPreconditionFailed("preimage of b under g must be exactly {b}");
  return validate_shelf(BinaryOpTable::from_function(
      s.g.size(), [&](Element x, Element y) { return x == s.b ? s.g[y] : y; }));
}

Shelf build(const family::PartitionFamily& s) {
  if (s.blocks.size() != s.maps.size())
    throw SpecPreconditionFailed("need one map per block");
  std::size_t n = 0;
  for (const auto& b : s.blocks) n += b.size();
  if (n == 0) throw SpecPreconditionFailed("carrier must be nonempty");
  std::vector<std::size_t> block_of(n, s.blocks.size());
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (auto x : s.blocks[i]) {
      if (x >= n || block_of[x] != s.blocks.size())
        throw SpecPreconditionFailed("blocks must partition 0..n-1");
      block_of[x] = i;
    }
  for (const auto& g : s.maps) {
    if (g.size() != n) throw SpecPreconditionFailed("every map must be defined on the carrier");
    check_map(g, "g_i");
  }
  for (std::size_t i = 0; i < s.maps.size(); ++i)
    for (Element x = 0; x < n; ++x) {
      const auto& gi = s.maps[i];
      const std::size_t j = block_of[x];
      if (block_of[gi[x]] != j)
        throw SpecPreconditionFailed("g_" + std::to_string(i) + " does not preserve block " +
                                     std::to_string(j));
      if (s.maps[j][gi[x]] != gi[x])
        throw SpecPreconditionFailed("g_" + std::to_string(i) + " != g_" + std::to_string(j) +
                                     " o g_" + std::to_string(i) + " on block " +
                                     std::to_string(j));
    }
  return validate_shelf(BinaryOpTable::from_function(
      n, [&](Element x, Element y) { return s.maps[block_of[x]][y]; }));
}

template <class SetOp>
Shelf subset_shelf(const std::vector<SubsetMask>& fam, SetOp op, const char* what) {
  if (fam.empty()) throw SpecPreconditionFailed("family must be nonempty");
  std::map<SubsetMask, Element> index;
  for (Element i = 0; i < fam.size(); ++i)
    if (!index.emplace(fam[i], i).second)
      throw SpecPreconditionFailed("family lists a subset twice");
  return validate_shelf(BinaryOpTable::from_function(fam.size(), [&](Element x, Element y) {
    auto it = index.find(op(fam[x], fam[y]));
    if (it == index.end())
      throw SpecPreconditionFailed(std::string("family is not closed under ") + what);
    return it->second;
  }));
}

Shelf build(const family::IntersectionShelf& s) {
  return subset_shelf(s.family, [](SubsetMask a, SubsetMask b) { return a & b; },
                      "intersection");
}

Shelf build(const family::SubtractionShelf& s) {
  return subset_shelf(s.family, [](SubsetMask a, SubsetMask b) { return a & ~b; },
                      "subtraction");
}

MultiShelf build(const family::BooleanMultiShelf& s) {
  if (s.omega > 12) throw SpecPreconditionFailed("|Omega| > 12 is not supported");
  const std::size_t n = std::size_t{1} << s.omega;
  return validate_multishelf({
      BinaryOpTable::identity(n),
      BinaryOpTable::from_function(n, [](Element x, Element y) { return x & y; }),
      BinaryOpTable::from_function(n, [](Element x, Element y) { return x | y; }),
      BinaryOpTable::right_trivial(n),
  });
}

Shelf build(const family::IdentityOp& s) {
  if (s.n == 0) throw SpecPreconditionFailed("carrier must be nonempty");
  return validate_shelf(BinaryOpTable::identity(s.n));
}

Shelf build(const family::RightTrivialOp& s) {
  if (s.n == 0) throw SpecPreconditionFailed("carrier must be nonempty");
  return validate_shelf(BinaryOpTable::right_trivial(s.n));
}

}  // namespace

Structure construct_family(const FamilySpec& spec) {
  return std::visit([](const auto& s) -> Structure { return build(s); }, spec);
}

Shelf make_shelf(const FamilySpec& spec) {
  auto s = construct_family(spec);
  if (auto* shelf = std::get_if<Shelf>(&s)) return *shelf;
  throw SpecPreconditionFailed("family produces a multi-shelf, not a shelf");
}

MultiShelf make_multishelf(const FamilySpec& spec) {
  auto s = construct_family(spec);
  if (auto* ms = std::get_if<MultiShelf>(&s)) return *ms;
  return MultiShelf::from_shelf(std::get<Shelf>(s));
}

}  // namespace shelfhom
