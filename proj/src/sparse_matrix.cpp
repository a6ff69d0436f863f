#include "citex/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "citex/errors.hpp"

namespace citex {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_offsets_(rows + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw std::invalid_argument("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                                  ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!std::isfinite(e.value) || e.value < 0.0) {
      throw std::invalid_argument("entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                                  ") is negative or not finite");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m(rows, cols);
  m.col_indices_.reserve(entries.size());
  m.values_.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    if (k > 0 && entries[k - 1].row == e.row && entries[k - 1].col == e.col) {
      throw std::invalid_argument("duplicate entry (" + std::to_string(e.row) + ", " +
                                  std::to_string(e.col) + ")");
    }
    ++m.row_offsets_[e.row + 1];
    m.col_indices_.push_back(e.col);
    m.values_.push_back(e.value);
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_offsets_[r + 1] += m.row_offsets_[r];
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Triplet> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, 1.0});
  return from_triplets(n, n, std::move(entries));
}

double SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::at");
  const auto begin = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
  const auto end = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
  const auto it = std::lower_bound(begin, end, col);
  if (it == end || *it != col) return 0.0;
  return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

bool SparseMatrix::contains(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) return false;
  const auto begin = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
  const auto end = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
  return std::binary_search(begin, end, col);
}

std::vector<double> SparseMatrix::row_sums() const {
  std::vector<double> sums(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) sums[r] += values_[k];
  }
  return sums;
}

std::vector<double> SparseMatrix::column_sums() const {
  std::vector<double> sums(cols_, 0.0);
  for (std::size_t k = 0; k < values_.size(); ++k) sums[col_indices_[k]] += values_[k];
  return sums;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_offsets_[r]; k < row_offsets_[r + 1]; ++k) {
      out.push_back({r, col_indices_[k], values_[k]});
    }
  }
  return out;
}

std::vector<double> spmv(const SparseMatrix& matrix, std::span<const double> vector) {
  if (vector.size() != matrix.cols()) {
    throw Error(ErrorKind::dimension_mismatch,
                "matrix has " + std::to_string(matrix.cols()) + " columns, vector has " +
                    std::to_string(vector.size()) + " entries");
  }
  const auto offsets = matrix.row_offsets();
  const auto cols = matrix.col_indices();
  const auto vals = matrix.values();
  std::vector<double> out(matrix.rows(), 0.0);
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    double acc = 0.0;
    for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) acc += vals[k] * vector[cols[k]];
    out[r] = acc;
  }
  return out;
}

std::vector<double> spmv_transposed(const SparseMatrix& matrix, std::span<const double> vector) {
  if (vector.size() != matrix.rows()) {
    throw Error(ErrorKind::dimension_mismatch,
                "matrix has " + std::to_string(matrix.rows()) + " rows, vector has " +
                    std::to_string(vector.size()) + " entries");
  }
  const auto offsets = matrix.row_offsets();
  const auto cols = matrix.col_indices();
  const auto vals = matrix.values();
  std::vector<double> out(matrix.cols(), 0.0);
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    const double v = vector[r];
    for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k) out[cols[k]] += vals[k] * v;
  }
  return out;
}

}  // namespace citex
