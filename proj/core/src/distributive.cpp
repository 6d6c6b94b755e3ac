#include "shelfhom/distributive.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "shelfhom/orbits.hpp"

namespace shelfhom {

DistributivityViolation::DistributivityViolation(std::size_t x_, std::size_t y_, std::size_t z_,
                                                 std::size_t lhs_, std::size_t rhs_)
    : InputError("self-distributivity fails at (x,y,z) = (" + std::to_string(x_) + "," +
                 std::to_string(y_) + "," + std::to_string(z_) + "): (x*y)*z = " +
                 std::to_string(lhs_) + " but (x*z)*(y*z) = " + std::to_string(rhs_)),
      x(x_), y(y_), z(z_), lhs(lhs_), rhs(rhs_) {}

MutualDistributivityViolation::MutualDistributivityViolation(std::size_t k_, std::size_t l_,
                                                             std::size_t x_, std::size_t y_,
                                                             std::size_t z_)
    : InputError("ops " + std::to_string(k_) + " and " + std::to_string(l_) +
                 " are not mutually distributive at (x,y,z) = (" + std::to_string(x_) + "," +
                 std::to_string(y_) + "," + std::to_string(z_) + ")"),
      k(k_), l(l_), x(x_), y(y_), z(z_) {}

std::optional<DistributivityViolation> find_distributivity_violation(const BinaryOpTable& t) {
  const auto n = static_cast<Element>(t.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Element lhs = t(t(x, y), z);
        const Element rhs = t(t(x, z), t(y, z));
        if (lhs != rhs) return DistributivityViolation(x, y, z, lhs, rhs);
      }
  return std::nullopt;
}

bool mutually_distributive(const BinaryOpTable& k, const BinaryOpTable& l) {
  if (k.size() != l.size()) return false;
  const auto n = static_cast<Element>(k.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l(k(x, y), z) != k(l(x, z), l(y, z))) return false;
  return true;
}

Shelf validate_shelf(BinaryOpTable table) {
  if (auto v = find_distributivity_violation(table)) throw *v;
  return Shelf(std::move(table));
}

MultiShelf validate_multishelf(std::vector<BinaryOpTable> tables) {
  if (tables.empty()) throw EmptyList("a multi-shelf needs at least one operation");
  const std::size_t n = tables.front().size();
  for (std::size_t k = 1; k < tables.size(); ++k)
    if (tables[k].size() != n)
      throw SizeMismatch("op " + std::to_string(k) + " has size " +
                         std::to_string(tables[k].size()) + ", expected " + std::to_string(n));
  const auto nn = static_cast<Element>(n);
  for (std::size_t k = 0; k < tables.size(); ++k)
    for (std::size_t l = 0; l < tables.size(); ++l) {
      const auto& sk = tables[k];
      const auto& sl = tables[l];
      for (Element x = 0; x < nn; ++x)
        for (Element y = 0; y < nn; ++y)
          for (Element z = 0; z < nn; ++z)
            if (sl(sk(x, y), z) != sk(sl(x, z), sl(y, z)))
              throw MutualDistributivityViolation(k, l, x, y, z);
    }
  return MultiShelf(std::move(tables));
}

BinaryOpTable compose_ops(const BinaryOpTable& first, const BinaryOpTable& second) {
  if (first.size() != second.size())
    throw SizeMismatch("cannot compose ops of sizes " + std::to_string(first.size()) + " and " +
                       std::to_string(second.size()));
  return BinaryOpTable::from_function(
      first.size(), [&](Element x, Element y) { return second(first(x, y), y); });
}

BinaryOpTable inverse_op(const BinaryOpTable& op) {
  const std::size_t n = op.size();
  std::vector<Element> inv(n * n, 0);
  for (Element y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (Element z = 0; z < n; ++z) {
      const Element x = op(z, y);
      if (hit[x])
        throw SpecPreconditionFailed("right translation by " + std::to_string(y) +
                                     " is not a bijection");
      hit[x] = true;
      inv[x * n + y] = z;
    }
  }
  return BinaryOpTable(n, std::move(inv));
}

namespace {

bool translation_bijective(const BinaryOpTable& t, Element y) {
  std::vector<bool> hit(t.size(), false);
  for (Element x = 0; x < t.size(); ++x) {
    if (hit[t(x, y)]) return false;
    hit[t(x, y)] = true;
  }
  return true;
}

}  // namespace

bool has_bijective_translation(const BinaryOpTable& t) {
  for (Element y = 0; y < t.size(); ++y)
    if (translation_bijective(t, y)) return true;
  return false;
}

bool has_left_absorbing_element(const BinaryOpTable& t) {
  for (Element y = 0; y < t.size(); ++y) {
    const auto r = t.row(y);
    if (std::all_of(r.begin(), r.end(), [y](Element v) { return v == y; })) return true;
  }
  return false;
}

ShelfFlags classify(const Shelf& shelf) {
  const auto& t = shelf.table();
  ShelfFlags f;
  f.is_spindle = true;
  for (Element x = 0; x < t.size(); ++x) f.is_spindle = f.is_spindle && t(x, x) == x;
  f.is_invertible = true;
  for (Element y = 0; y < t.size() && f.is_invertible; ++y)
    f.is_invertible = translation_bijective(t, y);
  f.is_rack = f.is_invertible;
  f.is_left_connected = left_orbits(shelf).count() == 1;
  return f;
}

Shelf combine(CombineMode mode, std::span<const Shelf> shelves) {
  if (shelves.empty()) throw EmptyList("combine needs at least one shelf");
  if (mode == CombineMode::DisjointUnion) {
    std::vector<std::size_t> offset;
    std::vector<std::size_t> block;
    std::size_t total = 0;
    for (std::size_t i = 0; i < shelves.size(); ++i) {
      offset.push_back(total);
      for (std::size_t k = 0; k < shelves[i].size(); ++k) block.push_back(i);
      total += shelves[i].size();
    }
    auto t = BinaryOpTable::from_function(total, [&](Element x, Element y) -> Element {
      const auto bx = block[x];
      if (bx != block[y]) return x;
      const auto o = static_cast<Element>(offset[bx]);
      return shelves[bx](x - o, y - o) + o;
    });
    return validate_shelf(std::move(t));
  }
  std::size_t total = 1;
  for (const auto& s : shelves) total *= s.size();
  const auto m = shelves.size();
  auto t = BinaryOpTable::from_function(total, [&](Element x, Element y) -> Element {
    std::vector<Element> xs(m), ys(m);
    for (std::size_t i = m; i-- > 0;) {
      const auto ni = static_cast<Element>(shelves[i].size());
      xs[i] = x % ni;
      ys[i] = y % ni;
      x /= ni;
      y /= ni;
    }
    Element out = 0;
    for (std::size_t i = 0; i < m; ++i)
      out = out * static_cast<Element>(shelves[i].size()) + shelves[i](xs[i], ys[i]);
    return out;
  });
  return validate_shelf(std::move(t));
}

Shelf strong_retract_extend(const Shelf& base, std::size_t carrier_size,
                            std::span<const Element> retraction) {
  const std::size_t a = base.size();
  if (carrier_size < a)
    throw SizeMismatch("carrier of size " + std::to_string(carrier_size) +
                       " cannot contain a base of size " + std::to_string(a));
  if (retraction.size() != carrier_size)
    throw SizeMismatch("retraction must list one image per carrier element");
  for (std::size_t x = 0; x < carrier_size; ++x) {
    if (retraction[x] >= a)
      throw RetractionNotIdentityOnA("r(" + std::to_string(x) + ") = " +
                                     std::to_string(retraction[x]) + " is outside A");
    if (x < a && retraction[x] != x)
      throw RetractionNotIdentityOnA("r(" + std::to_string(x) + ") = " +
                                     std::to_string(retraction[x]) + " but r must fix A");
  }
  auto t = BinaryOpTable::from_function(carrier_size, [&](Element x, Element y) {
    return base(retraction[x], retraction[y]);
  });
  return validate_shelf(std::move(t));
}

MultiShelf distributive_closure(const MultiShelf& ms, std::size_t max_ops) {
  std::vector<BinaryOpTable> ops(ms.ops().begin(), ms.ops().end());
  std::set<BinaryOpTable> seen(ops.begin(), ops.end());
  auto add = [&](BinaryOpTable t) {
    if (seen.count(t)) return false;
    if (ops.size() >= max_ops)
      throw BoundExceeded("closure exceeded " + std::to_string(max_ops) + " operations", ops);
    seen.insert(t);
    ops.push_back(std::move(t));
    return true;
  };
  add(BinaryOpTable::identity(ms.size()));
  // Every pair (i, j) with max(i, j) >= done has not been composed yet.
  std::size_t done = 0;
  while (done < ops.size()) {
    const std::size_t end = ops.size();
    for (std::size_t i = 0; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) {
        if (i < done && j < done) continue;
        add(compose_ops(ops[i], ops[j]));
      }
    done = end;
  }
  return validate_multishelf(std::move(ops));
}

Element left_normed_product(const BinaryOpTable& op, std::span<const Element> elements) {
  if (elements.empty()) throw EmptyList("left-normed product of an empty list");
  Element acc = elements.front();
  for (std::size_t i = 1; i < elements.size(); ++i) acc = op(acc, elements[i]);
  return acc;
}

}  // namespace shelfhom
