#pragma once

// Finite ternary groupoids stored as multiplication cubes, and the structure
// derived from a verified ternary group: skew elements, the knot operation
// T(a,b,c) = [a b^ c] and its three divisions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ternhom {

// Element of a finite ternary groupoid. 0-based internally; every external
// format renders it 1-based.
struct Element {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

class TernaryCube {
 public:
  // `table` has order^3 entries indexed (a,b,c) a-major.
  TernaryCube(std::size_t order, std::vector<Element> table, std::string name = {});

  template <typename F>
  static TernaryCube from_function(std::size_t order, F&& f, std::string name = {}) {
    std::vector<Element> table;
    table.reserve(order * order * order);
    for (std::uint32_t a = 0; a < order; ++a)
      for (std::uint32_t b = 0; b < order; ++b)
        for (std::uint32_t c = 0; c < order; ++c)
          table.push_back(Element{static_cast<std::uint32_t>(f(a, b, c))});
    return TernaryCube(order, std::move(table), std::move(name));
  }

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::span<const Element> table() const noexcept { return table_; }

  // Bounds-checked product; throws MalformedInput on a bad index.
  Element mul(Element a, Element b, Element c) const;

  // Unchecked product on raw indices, for inner loops.
  std::uint32_t at(std::uint32_t a, std::uint32_t b, std::uint32_t c) const noexcept {
    return table_[(static_cast<std::size_t>(a) * order_ + b) * order_ + c].index;
  }

  bool contains(Element x) const noexcept { return x.index < order_; }

  // Cube of the same operation with element x renamed to image[x].
  TernaryCube relabeled(std::span<const std::uint32_t> image) const;

  bool operator==(const TernaryCube& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::string name_;
};

enum class AxiomViolation : std::uint8_t {
  Associativity,  // tuple (a,b,c,d,e)
  LeftSlot,       // tuple (b,c,x,y): [xbc] == [ybc] with x != y
  MiddleSlot,     // tuple (a,c,x,y): [axc] == [ayc]
  RightSlot,      // tuple (a,b,x,y): [abx] == [aby]
};

struct Witness {
  AxiomViolation kind;
  std::vector<Element> tuple;
};

struct AxiomReport {
  bool is_semigroup = true;
  bool is_quasigroup = true;
  std::vector<Witness> witnesses;

  bool is_group() const noexcept { return is_semigroup && is_quasigroup; }
};

struct VerifyOptions {
  std::size_t max_witnesses = 10;
  unsigned jobs = 1;
};

// Full check of [[abc]de] = [a[bcd]e] = [ab[cde]] and of unique solvability
// in each of the three argument slots (the fourth, d = [abc], always holds).
AxiomReport verify_group(const TernaryCube& cube, const VerifyOptions& options = {});

struct SkewTable {
  std::vector<Element> skew;

  Element operator[](Element a) const { return skew[a.index]; }
};

// Skew elements, solving [a a x] = a. Checks the classical identities
// [b a a^] = [b a^ a] = [a a^ b] = [a^ a b] = b, (abc)^ = [c^ b^ a^] and
// a^^ = a over the whole cube; throws NotAGroup when any of them fails.
SkewTable skew_table(const TernaryCube& cube);

enum class Division : std::uint8_t { T, L, M, R };

// A cube known to satisfy the ternary group axioms, bundled with its skew
// table. Construction is the only way to obtain one, so functions taking a
// TernaryGroup may assume the axioms.
class TernaryGroup {
 public:
  // Runs verify_group and skew_table; throws NotAGroup with the first witness.
  static TernaryGroup verified(TernaryCube cube, const VerifyOptions& options = {});
  // Skips every check. Only for fault injection in tests of the checkers
  // themselves; results of other operations are meaningless on a bad cube.
  static TernaryGroup unchecked(TernaryCube cube, SkewTable skew);

  const TernaryCube& cube() const noexcept { return cube_; }
  const SkewTable& skew() const noexcept { return skew_; }
  std::size_t order() const noexcept { return cube_.order(); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t c) const noexcept {
    return cube_.at(a, b, c);
  }
  std::uint32_t bar(std::uint32_t a) const noexcept { return skew_.skew[a].index; }

  // abcT = [a b^ c]
  std::uint32_t t(std::uint32_t a, std::uint32_t b, std::uint32_t c) const noexcept {
    return cube_.at(a, bar(b), c);
  }

  // T and its left, middle and right divisions:
  //   abcL = [a c^ b], abcM = [c b^ a], abcR = [b a^ c].
  Element divide(Division kind, Element a, Element b, Element c) const;

 private:
  TernaryGroup(TernaryCube cube, SkewTable skew) : cube_(std::move(cube)), skew_(std::move(skew)) {}

  TernaryCube cube_;
  SkewTable skew_;
};

struct Reduction {
  Element identity;
  std::vector<Element> binary_table;  // order^2 entries, x∘y at x*order + y

  Element product(Element x, Element y, std::size_t order) const {
    return binary_table[x.index * order + y.index];
  }
};

// Searches the idempotents e ([eee] = e) in index order for one where
// x∘y = [x e^ y] satisfies [abc] = (a∘b)∘c for every triple. Returns the
// first such e with its binary table.
std::optional<Reduction> is_reducible(const TernaryGroup& group);

// Checks the two region-coloring axioms for T over all quadruples:
//   (abcT)cdT = {ab(bcdT)T}(bcdT)dT  and  ab(bcdT)T = a(abcT){(abcT)cdT}T.
// Returns the first failing (a,b,c,d), or nothing.
std::optional<std::vector<Element>> check_t_axioms(const TernaryGroup& group);

// Checks T(L(a,b,c), b, c) = a, T(a, M(a,b,c), c) = b and T(a, b, R(a,b,c)) = c
// for every triple. Returns the first failing (a,b,c), or nothing.
std::optional<std::vector<Element>> check_division_contracts(const TernaryGroup& group);

// Bijection phi with phi([abc]_from) = [phi(a) phi(b) phi(c)]_to, found by
// backtracking over partial assignments; image[x] = phi(x).
std::optional<std::vector<std::uint32_t>> find_isomorphism(const TernaryCube& from,
                                                           const TernaryCube& to);

// All automorphisms of the cube, identity first.
std::vector<std::vector<std::uint32_t>> automorphisms(const TernaryCube& cube);

// Standard cube constructors.
TernaryCube cyclic_sum_cube(std::size_t n);                 // [abc] = a+b+c mod n
TernaryCube cyclic_shifted_cube(std::size_t n, std::size_t shift);  // a+b+c+shift mod n
TernaryCube heap_cube(std::size_t n);                       // a-b+c mod n
TernaryCube constant_cube(std::size_t n, std::uint32_t value);

}  // namespace ternhom
