#pragma once

// The chain complex of a ternary group. C_n is free on (n+2)-tuples for
// n >= -1 (C_{-2} is the integers, the empty tuple), with
//
//   d(x_0..x_{n+1}) = (x_1..x_{n+1})
//     + sum_{i=1..n} (-1)^i { ([x_0 x_i^ x_{i+1}], .., [x_{i-1} x_i^ x_{i+1}], x_{i+1}, .., x_{n+1})
//                          + (x_0, .., x_{i-1}, [x_{i-1} x_i^ x_{i+1}], .., [x_{i-1} x_i^ x_{n+1}]) }
//     + (-1)^{n+1} (x_0..x_n)
//
// split as d = dL - dR, and d_0(x_0,x_1) = x_1 - x_0, d_{-1} = 0. Homology is
// taken on the quotient by the degenerate subcomplex: tuples with a window
// (a, b, [b a^ b]) or ([b a^ b], b, a), degree >= 1 only.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ternhom/config.hpp"
#include "ternhom/cube.hpp"
#include "ternhom/integer.hpp"
#include "ternhom/sparse_matrix.hpp"

namespace ternhom {

struct Tuple {
  std::vector<Element> entries;

  int degree() const noexcept { return static_cast<int>(entries.size()) - 2; }
  auto operator<=>(const Tuple&) const = default;

  static Tuple of(std::initializer_list<std::uint32_t> zero_based);
  static Tuple one_based(std::initializer_list<std::uint32_t> one_based);
  std::string to_string() const;  // 1-based, e.g. "(3,2,1)"
};

// Sparse integer combination of tuples of one degree. Zero coefficients are
// never stored.
class Chain {
 public:
  explicit Chain(int degree = 1) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const std::map<Tuple, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const Tuple& t) const;

  void add(const Tuple& t, std::int64_t coefficient);
  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator+(const Chain& other) const;
  Chain operator-(const Chain& other) const;
  Chain operator*(std::int64_t k) const;
  Chain operator-() const { return *this * -1; }
  bool operator==(const Chain& other) const = default;

  std::string to_string() const;  // "(3,2,1)+(3,6,1)-2(1,1,2)", "0" when empty

 private:
  int degree_;
  std::map<Tuple, std::int64_t> terms_;
};

enum class BoundaryPart : std::uint8_t { Full, Left, Right };

Chain boundary(const TernaryGroup& group, const Tuple& t, BoundaryPart part = BoundaryPart::Full);
Chain boundary(const TernaryGroup& group, const Chain& c, BoundaryPart part = BoundaryPart::Full);

bool is_degenerate(const TernaryGroup& group, const Tuple& t);
bool is_degenerate(const TernaryGroup& group, std::span<const std::uint32_t> t);

// Drops degenerate terms: the image of c in the quotient complex.
Chain project_to_quotient(const TernaryGroup& group, const Chain& c);

// Raw-index form of the differential: calls emit(tuple, sign) for each term
// before cancellation.
template <typename Emit>
void for_each_boundary_term(const TernaryGroup& g, std::span<const std::uint32_t> x,
                            BoundaryPart part, Emit&& emit);

// Non-degenerate tuples of one degree in lexicographic order. Tuples are
// encoded base `order` with x_0 most significant, so lexicographic order is
// numeric order of the codes.
class TupleBasis {
 public:
  TupleBasis(const TernaryGroup& group, int degree, std::size_t max_basis);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return codes_.size(); }
  std::size_t length() const noexcept { return static_cast<std::size_t>(degree_ + 2); }

  Tuple tuple(std::size_t i) const;
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  void decode(std::uint64_t code, std::span<std::uint32_t> out) const;
  std::uint64_t encode(std::span<const std::uint32_t> t) const;
  // Basis index of a tuple code, or -1 for degenerate tuples.
  std::int64_t index_of_code(std::uint64_t code) const { return lookup_[code]; }
  std::optional<std::size_t> index_of(const Tuple& t) const;

  // Coefficient vector of the quotient image of c (degenerate terms dropped).
  std::vector<Integer> coordinates(const Chain& c) const;
  Chain to_chain(std::span<const Integer> coordinates) const;

 private:
  std::size_t order_;
  int degree_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::int64_t> lookup_;
};

// Matrix of d_degree on the quotient complex: rows index the basis of degree
// - 1, columns the basis of degree; column j is d(basis tuple j) with
// degenerate targets dropped.
struct BoundaryMatrix {
  int degree;
  TupleBasis rows;
  TupleBasis cols;
  SparseMatrix matrix;
};

// Valid for degree >= 0. Throws ResourceLimit when a basis exceeds
// limits.max_basis tuples.
BoundaryMatrix boundary_matrix(const TernaryGroup& group, int degree, const ComputeLimits& limits = {});

// MatrixMarket export with the degree and basis sizes in the header comments.
void write_boundary_matrix(std::ostream& out, const BoundaryMatrix& m);

struct ComplexReport {
  bool ok = true;
  std::string failure;          // empty when ok
  std::optional<Tuple> witness; // first violating tuple
  std::size_t tuples_checked = 0;
};

// Checks, for every tuple through max_degree: d∘d = 0 on the full complex,
// d∘d = 0 on the quotient, and that d maps degenerate tuples into the span
// of degenerate tuples.
ComplexReport verify_complex(const TernaryGroup& group, int max_degree, unsigned jobs = 1);

// ---------------------------------------------------------------------------

template <typename Emit>
void for_each_boundary_term(const TernaryGroup& g, std::span<const std::uint32_t> x,
                            BoundaryPart part, Emit&& emit) {
  const std::size_t len = x.size();
  if (len <= 1) return;  // d_{-1} = 0
  const bool left = part != BoundaryPart::Right;
  const bool right = part != BoundaryPart::Left;
  const int n = static_cast<int>(len) - 2;
  std::vector<std::uint32_t> buf(len - 1);
  const std::span<const std::uint32_t> face(buf);

  // In the Right part every sign is negated relative to the full formula so
  // that Full = Left - Right holds term by term.
  const int right_sign = part == BoundaryPart::Right ? -1 : 1;

  if (left) {
    std::copy(x.begin() + 1, x.end(), buf.begin());
    emit(face, 1);
  }
  for (int i = 1; i <= n; ++i) {
    const int sign = (i % 2) ? -1 : 1;
    if (left) {
      for (int j = 0; j < i; ++j) buf[j] = g.t(x[j], x[i], x[i + 1]);
      std::copy(x.begin() + i + 1, x.end(), buf.begin() + i);
      emit(face, sign);
    }
    if (right) {
      std::copy(x.begin(), x.begin() + i, buf.begin());
      for (std::size_t j = i + 1; j < len; ++j) buf[j - 1] = g.t(x[i - 1], x[i], x[j]);
      emit(face, sign * right_sign);
    }
  }
  if (right) {
    std::copy(x.begin(), x.end() - 1, buf.begin());
    emit(face, ((n + 1) % 2 ? -1 : 1) * right_sign);
  }
}

}  // namespace ternhom
