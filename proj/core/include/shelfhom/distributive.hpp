#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "shelfhom/error.hpp"
#include "shelfhom/op_table.hpp"

namespace shelfhom {

/// Table satisfying (x*y)*z = (x*z)*(y*z) for all triples. Only validate_shelf builds one.
class Shelf {
 public:
  const BinaryOpTable& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }
  Element operator()(Element x, Element y) const noexcept { return table_(x, y); }

  friend bool operator==(const Shelf&, const Shelf&) = default;

 private:
  friend Shelf validate_shelf(BinaryOpTable table);
  explicit Shelf(BinaryOpTable t) : table_(std::move(t)) {}
  BinaryOpTable table_;
};

/// Ordered family of tables on one carrier, pairwise (and self-) distributive.
class MultiShelf {
 public:
  std::size_t size() const noexcept { return ops_.front().size(); }
  std::size_t op_count() const noexcept { return ops_.size(); }
  const BinaryOpTable& op(std::size_t k) const { return ops_.at(k); }
  std::span<const BinaryOpTable> ops() const noexcept { return ops_; }

  /// Single-op multi-shelf; always valid since the shelf law is the k = l case.
  static MultiShelf from_shelf(const Shelf& s) { return MultiShelf({s.table()}); }

  friend bool operator==(const MultiShelf&, const MultiShelf&) = default;

 private:
  friend MultiShelf validate_multishelf(std::vector<BinaryOpTable> tables);
  explicit MultiShelf(std::vector<BinaryOpTable> ops) : ops_(std::move(ops)) {}
  std::vector<BinaryOpTable> ops_;
};

/// Lexicographically first violating triple, if any.
std::optional<DistributivityViolation> find_distributivity_violation(const BinaryOpTable& t);

/// Checks (a *k b) *l c = (a *l c) *k (b *l c) for the given ordered pair.
bool mutually_distributive(const BinaryOpTable& k, const BinaryOpTable& l);

Shelf validate_shelf(BinaryOpTable table);
MultiShelf validate_multishelf(std::vector<BinaryOpTable> tables);

/// x (*1 *2) y = (x *1 y) *2 y. Associative, with BinaryOpTable::identity as unit.
BinaryOpTable compose_ops(const BinaryOpTable& first, const BinaryOpTable& second);

/// For an op whose right translations are all bijective: x *^-1 y is the z with z*y = x.
/// Throws SpecPreconditionFailed otherwise.
BinaryOpTable inverse_op(const BinaryOpTable& op);

struct ShelfFlags {
  bool is_spindle = false;
  bool is_rack = false;
  bool is_left_connected = false;
  /// Every right translation x -> x*y is a bijection.
  bool is_invertible = false;
};

ShelfFlags classify(const Shelf& shelf);

/// Some right translation x -> x*y is bijective.
bool has_bijective_translation(const BinaryOpTable& t);
/// Some y with y*x = y for every x.
bool has_left_absorbing_element(const BinaryOpTable& t);

enum class CombineMode { DisjointUnion, DirectProduct };

/// Disjoint union places blocks consecutively. The product encodes (x_1, ..., x_m) in mixed
/// radix with the first factor most significant.
Shelf combine(CombineMode mode, std::span<const Shelf> shelves);

/// x*y = base(r(x), r(y)) where base lives on A = {0..|A|-1} embedded as the first |A|
/// elements of {0..n-1}. `retraction` must have length n and fix 0..|A|-1.
Shelf strong_retract_extend(const Shelf& base, std::size_t carrier_size,
                            std::span<const Element> retraction);

/// Thrown by distributive_closure when the bound is reached; carries the ops found so far.
struct BoundExceeded : ResourceError {
  BoundExceeded(const std::string& what, std::vector<BinaryOpTable> partial_ops)
      : ResourceError(what), partial(std::move(partial_ops)) {}
  std::vector<BinaryOpTable> partial;
};

/// Closes the op set under compose_ops, adjoining the identity op first if absent.
MultiShelf distributive_closure(const MultiShelf& ms, std::size_t max_ops);

/// ((x0*x1)*x2)*...*xk. Throws EmptyList on an empty list.
Element left_normed_product(const BinaryOpTable& op, std::span<const Element> elements);

}  // namespace shelfhom
