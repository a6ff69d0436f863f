#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace citex {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Non-negative matrix in compressed sparse row form. Column indices within a
/// row are strictly increasing. Explicitly stored zeros are kept so that a
/// derived matrix can share the sparsity pattern of its source.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  /// Empty (all-zero) rows x cols matrix.
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Throws std::invalid_argument on an out-of-range index, a duplicate cell,
  /// or a negative / non-finite value.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return values_.size(); }

  std::span<const std::size_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const std::size_t> col_indices() const noexcept { return col_indices_; }
  std::span<const double> values() const noexcept { return values_; }

  /// Value at (row, col); 0 for cells outside the pattern.
  double at(std::size_t row, std::size_t col) const;
  bool contains(std::size_t row, std::size_t col) const;

  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;

  /// Same pattern, each stored value replaced by f(row, col, value).
  template <typename F>
  SparseMatrix transform(F&& f) const {
    SparseMatrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
        out.values_[k] = f(r, col_indices_[k], values_[k]);
      }
    }
    return out;
  }

  std::vector<Triplet> triplets() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<std::size_t> col_indices_;
  std::vector<double> values_;
};

/// A * v. Throws citex::Error(DimensionMismatch) if v.size() != A.cols().
std::vector<double> spmv(const SparseMatrix& matrix, std::span<const double> vector);

/// A^T * v. Throws citex::Error(DimensionMismatch) if v.size() != A.rows().
std::vector<double> spmv_transposed(const SparseMatrix& matrix, std::span<const double> vector);

}  // namespace citex
