#pragma once

// Exact Smith normal form of sparse integer matrices.
//
// Elimination runs on a row-major working copy. A unit entry is chosen as
// pivot while one exists, minimizing the Markowitz cost
// (row length - 1) * (column count - 1); columns are scanned in increasing
// count order, then index, then row. Once no unit remains the pivot is an
// entry of least magnitude, ties broken by cost and then (row, col). Row
// operations are logged so the left transform can be applied to vectors
// later; column operations are logged on request.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ternhom/integer.hpp"
#include "ternhom/sparse_matrix.hpp"

namespace ternhom {

struct SmithOptions {
  bool compute_transforms = false;  // dense U and V; implies log_column_ops
  bool log_column_ops = false;      // needed by right_row / right_apply
  std::size_t max_entry_bits = 1u << 16;
  std::chrono::milliseconds time_budget{0};  // 0 = unlimited
};

// Identity except on coordinates i and j, where it is [[a, b], [c, d]].
// det = +-1. A row operation replaces A by G*A, a column operation by A*G.
// For i == j only `a` is used (a sign flip).
struct ElementaryOp {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Integer a = 1, b = 0, c = 0, d = 1;
};

// A = U * S * V with U, V unimodular and S = diag(d_1, ..., d_rank, 0, ...),
// d_k | d_{k+1}. In U^{-1}-coordinates the image of A is spanned by d_k e_k.
class SmithDecomposition {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  // Factors greater than one, in chain order.
  std::vector<Integer> torsion() const;

  DenseMatrix diagonal() const;
  const std::optional<DenseMatrix>& left() const noexcept { return u_; }
  const std::optional<DenseMatrix>& right() const noexcept { return v_; }
  bool has_column_log() const noexcept { return column_log_; }

  // Original row / column sitting at diagonal position k.
  std::size_t row_at(std::size_t k) const { return row_perm_.at(k); }
  std::size_t col_at(std::size_t k) const { return col_perm_.at(k); }

  std::vector<Integer> left_coordinates(std::span<const Integer> z) const;  // U^{-1} z
  std::vector<Integer> left_column(std::size_t k) const;                    // U e_k
  std::vector<Integer> left_inverse_row(std::size_t k) const;               // e_k^T U^{-1}
  std::vector<Integer> right_row(std::size_t k) const;                      // e_k^T V
  std::vector<Integer> right_apply(std::span<const Integer> w) const;       // V w

  std::size_t logged_row_ops() const noexcept { return row_ops_.size(); }
  std::size_t logged_col_ops() const noexcept { return col_ops_.size(); }

 private:
  friend class SmithEliminator;
  friend SmithDecomposition smith_normal_form(const SparseMatrix&, const SmithOptions&);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> factors_;
  std::vector<std::size_t> row_perm_;  // diagonal position -> original row
  std::vector<std::size_t> col_perm_;
  std::vector<ElementaryOp> row_ops_;  // in application order
  std::vector<ElementaryOp> col_ops_;
  bool column_log_ = false;
  std::optional<DenseMatrix> u_;
  std::optional<DenseMatrix> v_;
};

// Throws ResourceLimit when an entry exceeds max_entry_bits or the time
// budget runs out.
SmithDecomposition smith_normal_form(const SparseMatrix& a, const SmithOptions& options = {});

}  // namespace ternhom
