#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace shelfhom {

using Integer = mpz_class;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

/// Column-major sparse matrix over the integers. Each column is sorted by row, holds no
/// duplicate rows and stores no zeros.
class SparseIntMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    Integer value;
  };
  using Column = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  /// Duplicate positions are summed and zero sums dropped. Throws OutOfRange on bad indices.
  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols,
                                       std::vector<Triplet> triplets);
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);
  static SparseIntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  const Column& column(std::size_t c) const { return columns_.at(c); }
  /// Replaces column c after normalizing it (sort, merge, drop zeros).
  void set_column(std::size_t c, Column entries);

  Integer at(std::size_t r, std::size_t c) const;

  /// Row-major ordered.
  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Integer>> to_dense() const;

  SparseIntMatrix transpose() const;
  /// Applies a row permutation: row r moves to perm[r]. Same for columns.
  SparseIntMatrix permuted(const std::vector<std::size_t>& row_perm,
                           const std::vector<std::size_t>& col_perm) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    return a + (-b);
  }
  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

  /// "row,col,value" lines with a header, row-major.
  void write_csv(std::ostream& out) const;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

}  // namespace shelfhom
