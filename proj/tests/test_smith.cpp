#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "ternhom/errors.hpp"
#include "ternhom/smith.hpp"

using namespace ternhom;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density, int range) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-range, range);
  DenseMatrix d(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng) < density) d(i, j) = value(rng);
  return SparseMatrix::from_dense(d);
}

// Product of a few random integer matrices, so that non-trivial factors appear.
SparseMatrix structured_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> value(-3, 3);
  std::uniform_int_distribution<int> scale(1, 6);
  const std::size_t inner = std::min(rows, cols);
  DenseMatrix a(rows, inner), b(inner, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) a(i, k) = value(rng);
  for (std::size_t k = 0; k < inner; ++k) {
    const int s = scale(rng);
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = value(rng) * s;
  }
  return SparseMatrix::from_dense(a * b);
}

std::vector<std::vector<Integer>> rows_of(const SparseMatrix& m) {
  const auto d = m.to_dense();
  std::vector<std::vector<Integer>> out(d.rows(), std::vector<Integer>(d.cols()));
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) out[i][j] = d(i, j);
  return out;
}

void check_decomposition(const SparseMatrix& a) {
  const auto s = smith_normal_form(a, {.compute_transforms = true});
  REQUIRE(s.left().has_value());
  REQUIRE(s.right().has_value());
  CHECK(*s.left() * s.diagonal() * *s.right() == a.to_dense());
  const auto& f = s.invariant_factors();
  for (std::size_t k = 0; k < f.size(); ++k) {
    CHECK(f[k] > 0);
    if (k) CHECK(f[k] % f[k - 1] == 0);
  }
}

}  // namespace

TEST_CASE("small examples") {
  const auto id = smith_normal_form(SparseMatrix::from_dense(DenseMatrix::identity(3)));
  CHECK(id.invariant_factors() == std::vector<Integer>{1, 1, 1});
  CHECK(id.torsion().empty());

  const auto d = smith_normal_form(SparseMatrix::from_dense(DenseMatrix(2, 2, {2, 0, 0, 3})));
  CHECK(d.invariant_factors() == std::vector<Integer>{1, 6});
  CHECK(d.torsion() == std::vector<Integer>{6});

  const auto z = smith_normal_form(SparseMatrix(4, 3));
  CHECK(z.rank() == 0);
  CHECK(z.diagonal() == DenseMatrix(4, 3));

  const auto empty = smith_normal_form(SparseMatrix(0, 5));
  CHECK(empty.rank() == 0);

  const auto t = smith_normal_form(SparseMatrix::from_dense(DenseMatrix(2, 3, {2, 4, 4, -6, 6, 12})));
  CHECK(t.invariant_factors() == std::vector<Integer>{2, 6});
}

TEST_CASE("U S V reproduces the input") {
  std::mt19937 rng(17);
  for (auto [r, c] : {std::pair{1, 1}, {3, 5}, {7, 4}, {12, 12}, {20, 31}}) {
    INFO(r, "x", c);
    check_decomposition(random_matrix(rng, r, c, 0.5, 4));
    check_decomposition(structured_matrix(rng, r, c));
  }
  check_decomposition(random_matrix(rng, 200, 200, 0.03, 2));
  check_decomposition(structured_matrix(rng, 60, 80));
}

TEST_CASE("transforms are unimodular") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = smith_normal_form(structured_matrix(rng, 6, 8), {.compute_transforms = true});
    CHECK(abs(s.left()->determinant()) == 1);
    CHECK(abs(s.right()->determinant()) == 1);
  }
}

TEST_CASE("vector transforms match the dense transforms") {
  std::mt19937 rng(23);
  const auto a = structured_matrix(rng, 9, 13);
  const auto s = smith_normal_form(a, {.compute_transforms = true});
  const auto& u = *s.left();
  const auto& v = *s.right();
  std::uniform_int_distribution<int> value(-5, 5);
  std::vector<Integer> z(9), w(13);
  for (auto& x : z) x = value(rng);
  for (auto& x : w) x = value(rng);

  // U * (U^{-1} z) == z
  const auto y = s.left_coordinates(z);
  for (std::size_t i = 0; i < 9; ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k < 9; ++k) acc += u(i, k) * y[k];
    CHECK(acc == z[i]);
  }
  for (std::size_t k = 0; k < 9; ++k) {
    const auto col = s.left_column(k);
    for (std::size_t i = 0; i < 9; ++i) CHECK(col[i] == u(i, k));
    // e_k^T U^{-1} U = e_k^T
    const auto row = s.left_inverse_row(k);
    for (std::size_t j = 0; j < 9; ++j) {
      Integer acc = 0;
      for (std::size_t i = 0; i < 9; ++i) acc += row[i] * u(i, j);
      CHECK(acc == (j == k ? 1 : 0));
    }
  }
  for (std::size_t k = 0; k < 13; ++k) {
    const auto row = s.right_row(k);
    for (std::size_t j = 0; j < 13; ++j) CHECK(row[j] == v(k, j));
  }
  const auto vw = s.right_apply(w);
  for (std::size_t i = 0; i < 13; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < 13; ++j) acc += v(i, j) * w[j];
    CHECK(acc == vw[i]);
  }
}

TEST_CASE("column transforms need the log") {
  const auto s = smith_normal_form(SparseMatrix::from_dense(DenseMatrix(2, 2, {2, 0, 0, 3})));
  CHECK_FALSE(s.has_column_log());
  CHECK_THROWS_AS(s.right_row(0), ContractViolation);
}

TEST_CASE("agreement with the textbook reduction") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 9);
    const auto a = trial % 2 ? random_matrix(rng, dim(rng), dim(rng), 0.6, 6) : structured_matrix(rng, dim(rng), dim(rng));
    auto expected = oracle::textbook_smith(rows_of(a));
    std::sort(expected.begin(), expected.end());
    CHECK(smith_normal_form(a).invariant_factors() == expected);
  }
}

TEST_CASE("factors do not depend on row and column order") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = structured_matrix(rng, 10, 14).to_dense();
    std::vector<std::size_t> rp(10), cp(14);
    std::iota(rp.begin(), rp.end(), 0u);
    std::iota(cp.begin(), cp.end(), 0u);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    DenseMatrix b(10, 14);
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 14; ++j) b(i, j) = a(rp[i], cp[j]);
    CHECK(smith_normal_form(SparseMatrix::from_dense(a)).invariant_factors() ==
          smith_normal_form(SparseMatrix::from_dense(b)).invariant_factors());
  }
}

TEST_CASE("entry size limit") {
  // A single 41-bit entry.
  DenseMatrix d(1, 1, {1});
  d(0, 0) = Integer(1) << 40;
  const auto a = SparseMatrix::from_dense(d);
  CHECK_THROWS_AS(smith_normal_form(a, {.max_entry_bits = 8}), ResourceLimit);
  CHECK(smith_normal_form(a, {.max_entry_bits = 64}).invariant_factors().front() == (Integer(1) << 40));
}
