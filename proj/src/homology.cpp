#include "ternhom/homology.hpp"

#include <numeric>

#include "ternhom/errors.hpp"

namespace ternhom {

std::string HomologyGroup::to_string() const {
  std::string out;
  if (betti > 0) out = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z_" + t.str();
  }
  return out.empty() ? "0" : out;
}

bool ClassCoordinates::is_zero() const {
  for (const auto& x : free_part)
    if (x != 0) return false;
  for (const auto& x : torsion_part)
    if (x != 0) return false;
  return true;
}

Integer ClassCoordinates::additive_order() const {
  for (const auto& x : free_part)
    if (x != 0) return 0;
  Integer order = 1;
  for (std::size_t k = 0; k < torsion_part.size(); ++k) {
    const Integer g = gcd(torsion_part[k], moduli[k]);
    const Integer o = moduli[k] / g;
    order = order / gcd(order, o) * o;
  }
  return order;
}

ClassCoordinates ClassCoordinates::operator+(const ClassCoordinates& other) const {
  if (moduli != other.moduli || free_part.size() != other.free_part.size())
    throw MalformedInput("class coordinates from different homology groups");
  ClassCoordinates out = *this;
  for (std::size_t k = 0; k < free_part.size(); ++k) out.free_part[k] += other.free_part[k];
  for (std::size_t k = 0; k < torsion_part.size(); ++k)
    out.torsion_part[k] = floor_mod(torsion_part[k] + other.torsion_part[k], moduli[k]);
  return out;
}

ClassCoordinates ClassCoordinates::operator-() const {
  ClassCoordinates out = *this;
  for (auto& x : out.free_part) x = -x;
  for (std::size_t k = 0; k < torsion_part.size(); ++k) out.torsion_part[k] = floor_mod(-torsion_part[k], moduli[k]);
  return out;
}

std::string ClassCoordinates::to_string() const {
  std::string out = "free=(";
  for (std::size_t k = 0; k < free_part.size(); ++k) out += (k ? "," : "") + free_part[k].str();
  out += ") torsion=(";
  for (std::size_t k = 0; k < torsion_part.size(); ++k)
    out += (k ? "," : "") + torsion_part[k].str() + " mod " + moduli[k].str();
  return out + ")";
}

// ---------------------------------------------------------------------------

HomologyCalculator::HomologyCalculator(const TernaryGroup& group, ComputeLimits limits)
    : group_(&group), limits_(limits) {}

const TupleBasis& HomologyCalculator::basis(int degree) {
  auto& slot = bases_[degree];
  if (!slot) slot = std::make_unique<TupleBasis>(*group_, degree, limits_.max_basis);
  return *slot;
}

const BoundaryMatrix& HomologyCalculator::boundary(int degree) {
  auto& slot = boundaries_[degree];
  if (!slot) slot = std::make_unique<BoundaryMatrix>(boundary_matrix(*group_, degree, limits_));
  return *slot;
}

const SmithDecomposition& HomologyCalculator::smith(int degree, bool column_log) {
  if (degree < 0) throw MalformedInput("no boundary matrix below degree 0");
  if (!column_log)
    if (auto it = smith_.find({degree, true}); it != smith_.end()) return *it->second;
  auto& slot = smith_[{degree, column_log}];
  if (!slot) {
    SmithOptions options;
    options.log_column_ops = column_log;
    options.max_entry_bits = limits_.max_entry_bits;
    options.time_budget = limits_.snf_time_budget;
    slot = std::make_unique<SmithDecomposition>(smith_normal_form(boundary(degree).matrix, options));
  }
  return *slot;
}

std::size_t HomologyCalculator::rank(int degree) {
  if (degree < 0) return 0;
  return smith(degree).rank();
}

HomologyGroup HomologyCalculator::homology(int degree) {
  if (degree < -1) throw MalformedInput("homology is defined from degree -1 up");
  HomologyGroup h;
  h.degree = degree;
  h.betti = basis(degree).size() - rank(degree) - rank(degree + 1);
  h.torsion = smith(degree + 1).torsion();
  return h;
}

const HomologyCalculator::FreeCoordinates& HomologyCalculator::free_coordinates(int degree) {
  auto& slot = free_[degree];
  if (slot) return *slot;
  const auto& upper = smith(degree + 1);
  auto fc = std::make_unique<FreeCoordinates>();
  fc->offset = upper.rank();
  if (degree >= 0) {
    const auto& d = boundary(degree).matrix;
    SparseMatrix m(d.rows(), basis(degree).size() - fc->offset);
    for (std::size_t k = fc->offset; k < basis(degree).size(); ++k) {
      const auto image = d.multiply(upper.left_column(k));
      std::vector<SparseMatrix::Entry> column;
      for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != 0) column.push_back({i, image[i]});
      m.set_column(k - fc->offset, std::move(column));
    }
    SmithOptions options;
    options.log_column_ops = true;
    options.max_entry_bits = limits_.max_entry_bits;
    options.time_budget = limits_.snf_time_budget;
    fc->cycles = smith_normal_form(m, options);
  }
  slot = std::move(fc);
  return *slot;
}

ClassCoordinates HomologyCalculator::class_of(const Chain& z) {
  const int degree = z.degree();
  if (degree < -1) throw MalformedInput("homology classes are defined from degree -1 up");
  const auto x = basis(degree).coordinates(z);
  if (degree >= 0) {
    for (const auto& v : boundary(degree).matrix.multiply(x))
      if (v != 0) throw ContractViolation("chain " + z.to_string() + " is not a cycle of the quotient complex");
  }

  const auto& upper = smith(degree + 1);
  const auto y = upper.left_coordinates(x);
  const auto& factors = upper.invariant_factors();
  ClassCoordinates out;
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (factors[k] > 1) {
      out.moduli.push_back(factors[k]);
      out.torsion_part.push_back(floor_mod(y[k], factors[k]));
    }

  const auto& fc = free_coordinates(degree);
  std::vector<Integer> w(y.begin() + static_cast<std::ptrdiff_t>(fc.offset), y.end());
  if (degree < 0) {
    out.free_part = std::move(w);
    return out;
  }
  const auto v = fc.cycles.right_apply(w);
  const std::size_t r = fc.cycles.rank();
  for (std::size_t k = 0; k < r; ++k)
    if (v[k] != 0) throw ContractViolation("cycle coordinates left the kernel; the decomposition is inconsistent");
  out.free_part.assign(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
  return out;
}

HomologyGroup homology_group(const TernaryGroup& group, int degree, const ComputeLimits& limits) {
  return HomologyCalculator(group, limits).homology(degree);
}

ClassCoordinates class_of_cycle(const TernaryGroup& group, const Chain& z, const ComputeLimits& limits) {
  return HomologyCalculator(group, limits).class_of(z);
}

}  // namespace ternhom
