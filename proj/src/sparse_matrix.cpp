#include "ternhom/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ternhom/errors.hpp"

namespace ternhom {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long long> values)
    : DenseMatrix(rows, cols) {
  if (values.size() != rows * cols) throw MalformedInput("dense matrix initializer has wrong size");
  std::size_t k = 0;
  for (auto v : values) data_[k++] = v;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
  if (cols_ != other.rows_) throw MalformedInput("matrix dimensions do not match");
  DenseMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        if (other(k, j) != 0) out(i, j) += a * other(k, j);
    }
  return out;
}

Integer DenseMatrix::determinant() const {
  if (rows_ != cols_) throw MalformedInput("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  DenseMatrix m = *this;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& dense) {
  SparseMatrix m(dense.rows(), dense.cols());
  for (std::size_t j = 0; j < dense.cols(); ++j)
    for (std::size_t i = 0; i < dense.rows(); ++i)
      if (dense(i, j) != 0) m.columns_[j].push_back({i, dense(i, j)});
  return m;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

void SparseMatrix::set_column(std::size_t j, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  std::vector<Entry> merged;
  for (auto& e : entries) {
    if (e.row >= rows_) throw MalformedInput("sparse entry row out of range");
    if (!merged.empty() && merged.back().row == e.row)
      merged.back().value += e.value;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
  columns_.at(j) = std::move(merged);
}

Integer SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& col = columns_.at(j);
  const auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const Entry& e, std::size_t r) { return e.row < r; });
  return it != col.end() && it->row == i ? it->value : Integer(0);
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix d(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) d(e.row, j) = e.value;
  return d;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) t.columns_[e.row].push_back({j, e.value});
  return t;
}

std::vector<Integer> SparseMatrix::multiply(std::span<const Integer> x) const {
  if (x.size() != cols()) throw MalformedInput("vector length does not match matrix columns");
  std::vector<Integer> y(rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& e : columns_[j]) y[e.row] += e.value * x[j];
  }
  return y;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols() != other.cols()) return false;
  for (std::size_t j = 0; j < cols(); ++j) {
    const auto& a = columns_[j];
    const auto& b = other.columns_[j];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].row != b[k].row || a[k].value != b[k].value) return false;
  }
  return true;
}

void write_matrix_market(std::ostream& out, const SparseMatrix& m,
                         const std::vector<std::string>& comments) {
  out << "%%MatrixMarket matrix coordinate integer general\n";
  for (const auto& c : comments) out << "% " << c << "\n";
  out << m.rows() << " " << m.cols() << " " << m.nonzeros() << "\n";
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) out << e.row + 1 << " " << j + 1 << " " << e.value << "\n";
}

SparseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
    throw MalformedInput("missing MatrixMarket banner");
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream header(line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(header >> rows >> cols >> nnz)) throw MalformedInput("bad MatrixMarket size line");
  std::vector<std::vector<SparseMatrix::Entry>> columns(cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t i = 0, j = 0;
    std::string value;
    if (!(in >> i >> j >> value) || i < 1 || i > rows || j < 1 || j > cols)
      throw MalformedInput("bad MatrixMarket entry");
    columns[j - 1].push_back({i - 1, Integer(value)});
  }
  SparseMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) m.set_column(j, std::move(columns[j]));
  return m;
}

}  // namespace ternhom
