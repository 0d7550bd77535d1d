#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ternhom/integer.hpp"

namespace ternhom {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> values);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix operator*(const DenseMatrix& other) const;
  bool operator==(const DenseMatrix& other) const = default;

  // Determinant by fraction-free (Bareiss) elimination; square matrices only.
  Integer determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Column-compressed integer matrix. Each column holds entries sorted by row
// with no stored zeros.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t row;
    Integer value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix from_dense(const DenseMatrix& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  std::size_t nonzeros() const noexcept;

  const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
  // Takes (row, value) pairs in any order; duplicates are summed, zeros dropped.
  void set_column(std::size_t j, std::vector<Entry> entries);
  Integer at(std::size_t i, std::size_t j) const;

  DenseMatrix to_dense() const;
  SparseMatrix transposed() const;
  std::vector<Integer> multiply(std::span<const Integer> x) const;
  bool operator==(const SparseMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

// MatrixMarket coordinate format, 1-based indices. Comment lines are written
// after the banner, each prefixed with '%'.
void write_matrix_market(std::ostream& out, const SparseMatrix& m,
                         const std::vector<std::string>& comments = {});
SparseMatrix read_matrix_market(std::istream& in);

}  // namespace ternhom
