#pragma once

// Homology of the quotient complex and coordinates of homology classes.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ternhom/chain.hpp"
#include "ternhom/config.hpp"
#include "ternhom/integer.hpp"
#include "ternhom/smith.hpp"

namespace ternhom {

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // factors > 1, each dividing the next

  bool operator==(const HomologyGroup&) const = default;
  std::string to_string() const;  // "Z^6 + Z_9"
};

// Coordinates of a class in H_d = Z^betti + Z_{t_1} + ... + Z_{t_k}.
struct ClassCoordinates {
  std::vector<Integer> free_part;
  std::vector<Integer> torsion_part;  // residue k lies in [0, moduli[k])
  std::vector<Integer> moduli;

  bool is_zero() const;
  // 0 for classes of infinite order.
  Integer additive_order() const;
  ClassCoordinates operator+(const ClassCoordinates& other) const;
  ClassCoordinates operator-() const;

  auto operator<=>(const ClassCoordinates&) const = default;
  std::string to_string() const;  // "free=(0,1) torsion=(3 mod 9)"
};

// Caches boundary matrices and their Smith decompositions per degree.
// Not thread-safe.
class HomologyCalculator {
 public:
  explicit HomologyCalculator(const TernaryGroup& group, ComputeLimits limits = {});
  HomologyCalculator(TernaryGroup&&, ComputeLimits = {}) = delete;  // keeps a pointer to the group

  const TernaryGroup& group() const noexcept { return *group_; }
  const ComputeLimits& limits() const noexcept { return limits_; }

  // Valid for degree >= -1.
  HomologyGroup homology(int degree);
  ClassCoordinates class_of(const Chain& z);

  const TupleBasis& basis(int degree);
  const BoundaryMatrix& boundary(int degree);  // degree >= 0
  const SmithDecomposition& smith(int degree, bool column_log = false);
  std::size_t rank(int degree);  // rank of d_degree; 0 for degree < 0

 private:
  struct FreeCoordinates {
    std::size_t offset = 0;  // first non-pivot position of smith(degree + 1)
    SmithDecomposition cycles;  // Smith form of d_degree on the complement
  };
  const FreeCoordinates& free_coordinates(int degree);

  const TernaryGroup* group_;
  ComputeLimits limits_;
  std::map<int, std::unique_ptr<TupleBasis>> bases_;
  std::map<int, std::unique_ptr<BoundaryMatrix>> boundaries_;
  std::map<std::pair<int, bool>, std::unique_ptr<SmithDecomposition>> smith_;
  std::map<int, std::unique_ptr<FreeCoordinates>> free_;
};

HomologyGroup homology_group(const TernaryGroup& group, int degree, const ComputeLimits& limits = {});

// Throws ContractViolation when z is not a cycle of the quotient complex.
ClassCoordinates class_of_cycle(const TernaryGroup& group, const Chain& z, const ComputeLimits& limits = {});

}  // namespace ternhom
