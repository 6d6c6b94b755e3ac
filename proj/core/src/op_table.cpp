#include "shelfhom/op_table.hpp"

#include <string>

#include "shelfhom/error.hpp"

namespace shelfhom {

BinaryOpTable::BinaryOpTable(std::size_t n, std::vector<Element> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (n_ == 0) throw OutOfRange("operation table must have a positive size");
  if (entries_.size() != n_ * n_)
    throw OutOfRange("operation table of size " + std::to_string(n_) + " needs " +
                     std::to_string(n_ * n_) + " entries, got " +
                     std::to_string(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] >= n_)
      throw OutOfRange("entry (" + std::to_string(i / n_) + "," + std::to_string(i % n_) +
                       ") = " + std::to_string(entries_[i]) + " is outside 0.." +
                       std::to_string(n_ - 1));
  }
}

BinaryOpTable BinaryOpTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw OutOfRange("operation table rows must all have length " +
                       std::to_string(rows.size()));
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return BinaryOpTable(rows.size(), std::move(flat));
}

BinaryOpTable BinaryOpTable::from_function(std::size_t n,
                                           const std::function<Element(Element, Element)>& op) {
  std::vector<Element> flat(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) flat[x * n + y] = op(x, y);
  return BinaryOpTable(n, std::move(flat));
}

BinaryOpTable BinaryOpTable::identity(std::size_t n) {
  return from_function(n, [](Element x, Element) { return x; });
}

BinaryOpTable BinaryOpTable::right_trivial(std::size_t n) {
  return from_function(n, [](Element, Element y) { return y; });
}

}  // namespace shelfhom
