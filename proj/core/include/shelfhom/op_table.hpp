#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace shelfhom {

/// Carrier elements are the indices 0..n-1.
using Element = std::uint32_t;

/// A raw binary operation on {0..n-1}; entry (x, y) holds x*y. No law is assumed.
class BinaryOpTable {
 public:
  BinaryOpTable() = default;

  /// Throws OutOfRange if n == 0, the entry count is not n*n, or an entry is >= n.
  BinaryOpTable(std::size_t n, std::vector<Element> row_major);

  static BinaryOpTable from_rows(const std::vector<std::vector<Element>>& rows);
  static BinaryOpTable from_function(std::size_t n,
                                     const std::function<Element(Element, Element)>& op);

  /// x*y = x
  static BinaryOpTable identity(std::size_t n);
  /// x*y = y
  static BinaryOpTable right_trivial(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Element operator()(Element x, Element y) const noexcept { return entries_[x * n_ + y]; }

  std::span<const Element> row(Element x) const noexcept {
    return {entries_.data() + x * n_, n_};
  }

  std::span<const Element> flat() const noexcept { return entries_; }

  friend bool operator==(const BinaryOpTable&, const BinaryOpTable&) = default;
  friend auto operator<=>(const BinaryOpTable& a, const BinaryOpTable& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> entries_;
};

}  // namespace shelfhom
