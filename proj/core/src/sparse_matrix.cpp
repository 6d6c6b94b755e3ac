#include "shelfhom/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <string>

#include "shelfhom/error.hpp"

namespace shelfhom {
namespace {

void normalize(SparseIntMatrix::Column& col) {
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < col.size();) {
    std::size_t j = i + 1;
    Integer sum = col[i].value;
    while (j < col.size() && col[j].row == col[i].row) sum += col[j++].value;
    if (sum != 0) {
      col[out].row = col[i].row;
      col[out].value = std::move(sum);
      ++out;
    }
    i = j;
  }
  col.resize(out);
}

}  // namespace

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                               std::vector<Triplet> triplets) {
  SparseIntMatrix m(rows, cols);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols)
      throw OutOfRange("triplet (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                       ") outside a " + std::to_string(rows) + "x" + std::to_string(cols) +
                       " matrix");
    m.columns_[t.col].push_back({static_cast<std::uint32_t>(t.row), std::move(t.value)});
  }
  for (auto& c : m.columns_) normalize(c);
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense.front().size();
  SparseIntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw SizeMismatch("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (dense[r][c] != 0) m.columns_[c].push_back({static_cast<std::uint32_t>(r), dense[r][c]});
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({static_cast<std::uint32_t>(i), 1});
  return m;
}

std::size_t SparseIntMatrix::nnz() const noexcept {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

void SparseIntMatrix::set_column(std::size_t c, Column entries) {
  for (const auto& e : entries)
    if (e.row >= rows_) throw OutOfRange("row index outside the matrix");
  normalize(entries);
  columns_.at(c) = std::move(entries);
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->value;
  return 0;
}

std::vector<Triplet> SparseIntMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) out.push_back({e.row, c, e.value});
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols(), 0));
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) d[e.row][c] = e.value;
  return d;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c])
      t.columns_[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  return t;
}

SparseIntMatrix SparseIntMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                          const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols())
    throw SizeMismatch("permutation sizes do not match the matrix");
  SparseIntMatrix p(rows_, cols());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    auto& dst = p.columns_[col_perm[c]];
    for (const auto& e : columns_[c])
      dst.push_back({static_cast<std::uint32_t>(row_perm[e.row]), e.value});
    normalize(dst);
  }
  return p;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows())
    throw SizeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()));
  SparseIntMatrix p(a.rows(), b.cols());
  std::map<std::uint32_t, Integer> acc;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    acc.clear();
    for (const auto& be : b.columns_[c])
      for (const auto& ae : a.columns_[be.row]) acc[ae.row] += ae.value * be.value;
    auto& col = p.columns_[c];
    for (auto& [r, v] : acc)
      if (v != 0) col.push_back({r, std::move(v)});
  }
  return p;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw SizeMismatch("cannot add matrices of different shapes");
  SparseIntMatrix s(a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    auto col = a.columns_[c];
    col.insert(col.end(), b.columns_[c].begin(), b.columns_[c].end());
    normalize(col);
    s.columns_[c] = std::move(col);
  }
  return s;
}

SparseIntMatrix operator-(const SparseIntMatrix& a) {
  SparseIntMatrix n = a;
  for (auto& col : n.columns_)
    for (auto& e : col) e.value = -e.value;
  return n;
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].row != y[i].row || x[i].value != y[i].value) return false;
  }
  return true;
}

void SparseIntMatrix::write_csv(std::ostream& out) const {
  out << "row,col,value\n";
  for (const auto& t : triplets()) out << t.row << ',' << t.col << ',' << t.value.get_str() << '\n';
}

}  // namespace shelfhom
