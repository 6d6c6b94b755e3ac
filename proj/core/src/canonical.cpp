#include "shelfhom/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "shelfhom/parallel.hpp"

namespace shelfhom {

BinaryOpTable relabel(const BinaryOpTable& table, const std::vector<Element>& p) {
  const std::size_t n = table.size();
  std::vector<Element> out(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) out[p[x] * n + p[y]] = p[table(x, y)];
  return BinaryOpTable(n, std::move(out));
}

IsoClassKey canonical_form(const BinaryOpTable& table) {
  const std::size_t n = table.size();
  if (n > kCanonicalSizeLimit)
    throw PracticalSizeLimit("canonical form is limited to tables of size <= " +
                             std::to_string(kCanonicalSizeLimit));
  std::vector<Element> best(table.flat().begin(), table.flat().end());
  std::vector<Element> cand(n * n);
  std::vector<Element> p(n), inv(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    for (Element x = 0; x < n; ++x) inv[p[x]] = x;
    // Fill the relabeled table in row-major order and stop at the first difference.
    bool smaller = false;
    bool larger = false;
    for (std::size_t i = 0; i < n * n && !larger; ++i) {
      const Element v = p[table(inv[i / n], inv[i % n])];
      cand[i] = v;
      if (!smaller) {
        if (v < best[i]) smaller = true;
        else if (v > best[i]) larger = true;
      }
    }
    if (smaller) best = cand;
  } while (std::next_permutation(p.begin(), p.end()));
  return {BinaryOpTable(n, std::move(best))};
}

namespace {

/// Depth-first fill of a row-major table; `kUnset` marks open cells.
class ShelfSearch {
 public:
  explicit ShelfSearch(std::size_t n) : n_(n), cells_(n * n, kUnset) {}

  void run_from(std::size_t first_value, const std::function<void(const BinaryOpTable&)>& emit) {
    cells_[0] = static_cast<Element>(first_value);
    if (consistent()) descend(1, emit);
    cells_[0] = kUnset;
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  Element at(Element x, Element y) const { return cells_[x * n_ + y]; }

  // Every instance of the shelf law whose five lookups are all defined must hold.
  bool consistent() const {
    const auto n = static_cast<Element>(n_);
    for (Element x = 0; x < n; ++x)
      for (Element z = 0; z < n; ++z) {
        const Element xz = at(x, z);
        if (xz == kUnset) continue;
        for (Element y = 0; y < n; ++y) {
          const Element xy = at(x, y);
          const Element yz = at(y, z);
          if (xy == kUnset || yz == kUnset) continue;
          const Element lhs = at(xy, z);
          const Element rhs = at(xz, yz);
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
      }
    return true;
  }

  void descend(std::size_t cell, const std::function<void(const BinaryOpTable&)>& emit) {
    if (cell == cells_.size()) {
      emit(BinaryOpTable(n_, cells_));
      return;
    }
    for (Element v = 0; v < n_; ++v) {
      cells_[cell] = v;
      if (consistent()) descend(cell + 1, emit);
    }
    cells_[cell] = kUnset;
  }

  std::size_t n_;
  std::vector<Element> cells_;
};

std::set<IsoClassKey> search_subtree(std::size_t n, std::size_t first_value,
                                     std::size_t* labeled) {
  std::set<IsoClassKey> keys;
  ShelfSearch search(n);
  search.run_from(first_value, [&](const BinaryOpTable& t) {
    if (labeled) ++*labeled;
    keys.insert(canonical_form(t));
  });
  return keys;
}

}  // namespace

std::vector<IsoClassKey> enumerate_shelves(std::size_t n, std::size_t jobs) {
  if (n == 0) throw OutOfRange("shelf size must be positive");
  if (n > kEnumerationSizeLimit)
    throw PracticalSizeLimit("shelf enumeration is limited to n <= " +
                             std::to_string(kEnumerationSizeLimit));
  std::vector<std::set<IsoClassKey>> parts(n);
  parallel_for(n, jobs, [&](std::size_t v) { parts[v] = search_subtree(n, v, nullptr); });
  std::set<IsoClassKey> all;
  for (auto& p : parts) all.merge(p);
  return {all.begin(), all.end()};
}

std::size_t count_labeled_shelves(std::size_t n) {
  if (n == 0 || n > kEnumerationSizeLimit)
    throw PracticalSizeLimit("labeled count is limited to 1 <= n <= " +
                             std::to_string(kEnumerationSizeLimit));
  std::size_t count = 0;
  ShelfSearch search(n);
  for (std::size_t v = 0; v < n; ++v)
    search.run_from(v, [&](const BinaryOpTable&) { ++count; });
  return count;
}

}  // namespace shelfhom
