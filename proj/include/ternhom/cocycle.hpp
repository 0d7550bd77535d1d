#pragma once

// 1-cocycles of the quotient complex with coefficients in Z_m, and the state
// sums they define on braid closures.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternhom/chain.hpp"
#include "ternhom/config.hpp"
#include "ternhom/homology.hpp"
#include "ternhom/knot.hpp"

namespace ternhom {

// A function X^3 -> Z_m, stored densely (a-major). Degenerate triples hold 0.
class CocycleFunction {
 public:
  CocycleFunction(std::uint64_t modulus, std::size_t order);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t order() const noexcept { return order_; }
  std::uint64_t value(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    return values_[(static_cast<std::size_t>(a) * order_ + b) * order_ + c];
  }
  void set(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::int64_t v);
  bool is_zero() const;

  // Sum of coefficient * f(tuple) over the chain, in [0, m).
  std::uint64_t evaluate(const Chain& c) const;

  CocycleFunction operator+(const CocycleFunction& other) const;
  CocycleFunction operator*(std::int64_t k) const;
  bool operator==(const CocycleFunction&) const = default;

 private:
  std::uint64_t modulus_;
  std::size_t order_;
  std::vector<std::uint64_t> values_;
};

// Generators of a subgroup of the cochains, with their additive orders.
// For prime m the generators form a basis over Z_m.
struct CocycleBasis {
  std::uint64_t modulus = 0;
  std::vector<CocycleFunction> generators;
  std::vector<std::uint64_t> orders;

  std::size_t size() const noexcept { return generators.size(); }
};

// f(a,b,c) = g(d(a,b,c)) for g: X^2 -> Z_m given a-major.
CocycleFunction coboundary_of(const TernaryGroup& group, std::uint64_t modulus, const std::vector<std::int64_t>& g);

// A degenerate triple where f is nonzero, or else the first quadruple q with
// f(dq) != 0; nothing when f is a cocycle of the quotient complex.
std::optional<Tuple> cocycle_violation(const TernaryGroup& group, const CocycleFunction& f);

CocycleBasis cocycle_space(HomologyCalculator& homology, std::uint64_t modulus);
CocycleBasis cocycle_space(const TernaryGroup& group, std::uint64_t modulus, const ComputeLimits& limits = {});

CocycleBasis coboundary_space(HomologyCalculator& homology, std::uint64_t modulus);
CocycleBasis coboundary_space(const TernaryGroup& group, std::uint64_t modulus, const ComputeLimits& limits = {});

struct StateSum {
  std::uint64_t modulus = 0;
  std::vector<std::size_t> counts;  // colorings per residue

  std::size_t total() const;
  bool operator==(const StateSum&) const = default;
  std::string to_string() const;  // group-ring element, "36 + 18 t^3 + 18 t^6"
};

// Throws ContractViolation when f is not a cocycle.
StateSum state_sum(const TernaryGroup& group, const BraidWord& braid, const CocycleFunction& f,
                   const ComputeLimits& limits = {});

}  // namespace ternhom
