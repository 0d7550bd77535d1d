#include "ternhom/cocycle.hpp"

#include "ternhom/errors.hpp"

namespace ternhom {

namespace {

std::uint64_t reduce(const Integer& v, std::uint64_t m) {
  return static_cast<std::uint64_t>(floor_mod(v, Integer(m)));
}

std::uint64_t reduce(std::int64_t v, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  const auto r = v % mm;
  return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

}  // namespace

CocycleFunction::CocycleFunction(std::uint64_t modulus, std::size_t order)
    : modulus_(modulus), order_(order), values_(order * order * order, 0) {
  if (modulus < 2) throw MalformedInput("cocycle modulus must be at least 2");
}

void CocycleFunction::set(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::int64_t v) {
  if (a >= order_ || b >= order_ || c >= order_) throw MalformedInput("cocycle argument out of range");
  values_[(static_cast<std::size_t>(a) * order_ + b) * order_ + c] = reduce(v, modulus_);
}

bool CocycleFunction::is_zero() const {
  for (auto v : values_)
    if (v) return false;
  return true;
}

std::uint64_t CocycleFunction::evaluate(const Chain& c) const {
  if (c.degree() != 1) throw MalformedInput("cocycles evaluate on degree-1 chains");
  std::int64_t sum = 0;
  const auto m = static_cast<std::int64_t>(modulus_);
  for (const auto& [t, k] : c.terms()) {
    const auto& e = t.entries;
    if (e[0].index >= order_ || e[1].index >= order_ || e[2].index >= order_)
      throw MalformedInput("chain entry out of range");
    const auto v = static_cast<std::int64_t>(value(e[0].index, e[1].index, e[2].index));
    sum = (sum + (k % m) * v) % m;
  }
  return reduce(sum, modulus_);
}

CocycleFunction CocycleFunction::operator+(const CocycleFunction& other) const {
  if (modulus_ != other.modulus_ || order_ != other.order_)
    throw MalformedInput("adding cochains with different modulus or order");
  CocycleFunction out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = (values_[i] + other.values_[i]) % modulus_;
  return out;
}

CocycleFunction CocycleFunction::operator*(std::int64_t k) const {
  CocycleFunction out = *this;
  const auto kk = reduce(k, modulus_);
  for (auto& v : out.values_) v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * kk) % modulus_);
  return out;
}

CocycleFunction coboundary_of(const TernaryGroup& group, std::uint64_t modulus, const std::vector<std::int64_t>& g) {
  const std::size_t n = group.order();
  if (g.size() != n * n) throw MalformedInput("a 0-cochain has order^2 values");
  CocycleFunction f(modulus, n);
  std::uint32_t x[3];
  for (x[0] = 0; x[0] < n; ++x[0])
    for (x[1] = 0; x[1] < n; ++x[1])
      for (x[2] = 0; x[2] < n; ++x[2]) {
        if (is_degenerate(group, std::span<const std::uint32_t>(x, 3))) continue;
        std::int64_t v = 0;
        for_each_boundary_term(group, std::span<const std::uint32_t>(x, 3), BoundaryPart::Full,
                               [&](std::span<const std::uint32_t> face, int sign) {
                                 v += sign * static_cast<std::int64_t>(reduce(g[face[0] * n + face[1]], modulus));
                               });
        f.set(x[0], x[1], x[2], v);
      }
  return f;
}

std::optional<Tuple> cocycle_violation(const TernaryGroup& group, const CocycleFunction& f) {
  const std::size_t n = group.order();
  if (f.order() != n) throw MalformedInput("cochain order does not match the group");
  std::uint32_t x[4];
  for (x[0] = 0; x[0] < n; ++x[0])
    for (x[1] = 0; x[1] < n; ++x[1])
      for (x[2] = 0; x[2] < n; ++x[2])
        if (f.value(x[0], x[1], x[2]) && is_degenerate(group, std::span<const std::uint32_t>(x, 3)))
          return Tuple::of({x[0], x[1], x[2]});
  const auto m = static_cast<std::int64_t>(f.modulus());
  for (x[0] = 0; x[0] < n; ++x[0])
    for (x[1] = 0; x[1] < n; ++x[1])
      for (x[2] = 0; x[2] < n; ++x[2])
        for (x[3] = 0; x[3] < n; ++x[3]) {
          std::int64_t v = 0;
          for_each_boundary_term(group, std::span<const std::uint32_t>(x, 4), BoundaryPart::Full,
                                 [&](std::span<const std::uint32_t> face, int sign) {
                                   v += sign * static_cast<std::int64_t>(f.value(face[0], face[1], face[2]));
                                 });
          if (v % m != 0) return Tuple::of({x[0], x[1], x[2], x[3]});
        }
  return std::nullopt;
}

namespace {

CocycleFunction from_coordinates(const TupleBasis& basis, std::size_t order, std::uint64_t modulus,
                                 const std::vector<Integer>& row, const Integer& scale) {
  CocycleFunction f(modulus, order);
  std::vector<std::uint32_t> t(3);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (row[i] == 0) continue;
    basis.decode(basis.code(i), t);
    f.set(t[0], t[1], t[2], static_cast<std::int64_t>(reduce(row[i] * scale, modulus)));
  }
  return f;
}

}  // namespace

CocycleBasis cocycle_space(HomologyCalculator& homology, std::uint64_t modulus) {
  if (modulus < 2) throw MalformedInput("cocycle modulus must be at least 2");
  const auto& basis = homology.basis(1);
  const auto& snf = homology.smith(2);
  const std::size_t n = homology.group().order();
  const Integer m(modulus);
  CocycleBasis out{modulus, {}, {}};
  // A functional phi on U^{-1}-coordinates is a cocycle iff phi_k d_k = 0 mod m.
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Integer scale = 1;
    std::uint64_t order = modulus;
    if (k < snf.rank()) {
      const Integer g = gcd(snf.invariant_factors()[k], m);
      if (g == 1) continue;
      scale = m / g;
      order = static_cast<std::uint64_t>(g);
    }
    auto f = from_coordinates(basis, n, modulus, snf.left_inverse_row(k), scale);
    if (f.is_zero()) continue;
    out.generators.push_back(std::move(f));
    out.orders.push_back(order);
  }
  return out;
}

CocycleBasis cocycle_space(const TernaryGroup& group, std::uint64_t modulus, const ComputeLimits& limits) {
  HomologyCalculator homology(group, limits);
  return cocycle_space(homology, modulus);
}

CocycleBasis coboundary_space(HomologyCalculator& homology, std::uint64_t modulus) {
  if (modulus < 2) throw MalformedInput("cocycle modulus must be at least 2");
  const auto& basis = homology.basis(1);
  const auto& snf = homology.smith(1, true);
  const std::size_t n = homology.group().order();
  const Integer m(modulus);
  CocycleBasis out{modulus, {}, {}};
  // Images g o d = psi^T S V: spanned by d_k e_k^T V, of order m / gcd(m, d_k).
  for (std::size_t k = 0; k < snf.rank(); ++k) {
    const Integer& d = snf.invariant_factors()[k];
    const Integer g = gcd(d, m);
    if (g == m) continue;
    auto f = from_coordinates(basis, n, modulus, snf.right_row(k), d);
    if (f.is_zero()) continue;
    out.generators.push_back(std::move(f));
    out.orders.push_back(static_cast<std::uint64_t>(m / g));
  }
  return out;
}

CocycleBasis coboundary_space(const TernaryGroup& group, std::uint64_t modulus, const ComputeLimits& limits) {
  HomologyCalculator homology(group, limits);
  return coboundary_space(homology, modulus);
}

std::size_t StateSum::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::string StateSum::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (!counts[r]) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(counts[r]);
    if (r == 1) out += " t";
    if (r > 1) out += " t^" + std::to_string(r);
  }
  return out.empty() ? "0" : out;
}

StateSum state_sum(const TernaryGroup& group, const BraidWord& braid, const CocycleFunction& f,
                   const ComputeLimits& limits) {
  if (auto bad = cocycle_violation(group, f))
    throw ContractViolation("not a cocycle: fails at " + bad->to_string());
  StateSum out{f.modulus(), std::vector<std::size_t>(f.modulus(), 0)};
  for (const auto& coloring : enumerate_colorings(group, braid, limits))
    ++out.counts[f.evaluate(cycle_of_coloring(group, braid, coloring).chain)];
  return out;
}

}  // namespace ternhom
