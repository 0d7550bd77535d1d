#include "ternhom/cube.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "ternhom/errors.hpp"
#include "ternhom/parallel.hpp"

namespace ternhom {

namespace {

std::string render(const std::vector<Element>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(tuple[i].index + 1);
  }
  return out + ")";
}

std::vector<Element> elements(std::initializer_list<std::uint32_t> xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(Element{x});
  return out;
}

}  // namespace

TernaryCube::TernaryCube(std::size_t order, std::vector<Element> table, std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
  if (order_ == 0) throw MalformedInput("cube order must be positive");
  if (table_.size() != order_ * order_ * order_)
    throw MalformedInput("cube table has " + std::to_string(table_.size()) +
                         " entries, expected " + std::to_string(order_ * order_ * order_));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i].index >= order_)
      throw MalformedInput("cube entry " + std::to_string(i) + " is out of range");
}

Element TernaryCube::mul(Element a, Element b, Element c) const {
  if (!contains(a) || !contains(b) || !contains(c))
    throw MalformedInput("element index out of range for cube of order " + std::to_string(order_));
  return Element{at(a.index, b.index, c.index)};
}

TernaryCube TernaryCube::relabeled(std::span<const std::uint32_t> image) const {
  if (image.size() != order_) throw MalformedInput("relabeling has wrong size");
  std::vector<Element> table(table_.size());
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b)
      for (std::uint32_t c = 0; c < order_; ++c)
        table[(static_cast<std::size_t>(image[a]) * order_ + image[b]) * order_ + image[c]] =
            Element{image[at(a, b, c)]};
  return TernaryCube(order_, std::move(table), name_);
}

AxiomReport verify_group(const TernaryCube& cube, const VerifyOptions& options) {
  const auto n = static_cast<std::uint32_t>(cube.order());
  const std::size_t k = options.max_witnesses;
  AxiomReport report;

  std::vector<std::vector<Witness>> partial(std::max(1u, options.jobs));
  parallel_chunks(n, options.jobs, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto& found = partial[chunk];
    for (auto a = static_cast<std::uint32_t>(begin); a < end; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          const auto abc = cube.at(a, b, c);
          for (std::uint32_t d = 0; d < n; ++d) {
            const auto bcd = cube.at(b, c, d);
            for (std::uint32_t e = 0; e < n; ++e) {
              const auto left = cube.at(abc, d, e);
              if (left != cube.at(a, bcd, e) || left != cube.at(a, b, cube.at(c, d, e))) {
                found.push_back({AxiomViolation::Associativity, elements({a, b, c, d, e})});
                if (found.size() >= std::max<std::size_t>(k, 1)) return;
              }
            }
          }
        }
  });
  for (auto& chunk : partial)
    for (auto& w : chunk) {
      report.is_semigroup = false;
      if (report.witnesses.size() < k) report.witnesses.push_back(std::move(w));
    }

  // Each slot map must be injective (hence bijective) for every fixed pair.
  std::vector<std::int64_t> seen(n);
  auto slot_check = [&](AxiomViolation kind, auto&& product) {
    for (std::uint32_t p = 0; p < n; ++p)
      for (std::uint32_t q = 0; q < n; ++q) {
        std::fill(seen.begin(), seen.end(), -1);
        for (std::uint32_t x = 0; x < n; ++x) {
          const auto v = product(p, q, x);
          if (seen[v] >= 0) {
            report.is_quasigroup = false;
            if (report.witnesses.size() < k)
              report.witnesses.push_back(
                  {kind, elements({p, q, static_cast<std::uint32_t>(seen[v]), x})});
            break;
          }
          seen[v] = x;
        }
      }
  };
  slot_check(AxiomViolation::LeftSlot, [&](auto b, auto c, auto x) { return cube.at(x, b, c); });
  slot_check(AxiomViolation::MiddleSlot, [&](auto a, auto c, auto x) { return cube.at(a, x, c); });
  slot_check(AxiomViolation::RightSlot, [&](auto a, auto b, auto x) { return cube.at(a, b, x); });
  return report;
}

SkewTable skew_table(const TernaryCube& cube) {
  const auto n = static_cast<std::uint32_t>(cube.order());
  SkewTable table;
  table.skew.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::size_t solutions = 0;
    for (std::uint32_t x = 0; x < n; ++x)
      if (cube.at(a, a, x) == a) {
        table.skew[a] = Element{x};
        ++solutions;
      }
    if (solutions != 1)
      throw NotAGroup("[a a x] = a has " + std::to_string(solutions) + " solutions for a = " +
                      std::to_string(a + 1));
  }
  auto bar = [&](std::uint32_t a) { return table.skew[a].index; };
  for (std::uint32_t a = 0; a < n; ++a) {
    if (bar(bar(a)) != a) throw NotAGroup("skew of skew differs from a = " + std::to_string(a + 1));
    for (std::uint32_t b = 0; b < n; ++b) {
      if (cube.at(b, a, bar(a)) != b || cube.at(b, bar(a), a) != b || cube.at(a, bar(a), b) != b ||
          cube.at(bar(a), a, b) != b)
        throw NotAGroup("skew border identity fails at " + render(elements({a, b})));
      for (std::uint32_t c = 0; c < n; ++c)
        if (bar(cube.at(a, b, c)) != cube.at(bar(c), bar(b), bar(a)))
          throw NotAGroup("skew of a product fails at " + render(elements({a, b, c})));
    }
  }
  return table;
}

TernaryGroup TernaryGroup::verified(TernaryCube cube, const VerifyOptions& options) {
  VerifyOptions first_only = options;
  first_only.max_witnesses = 1;
  const auto report = verify_group(cube, first_only);
  if (!report.is_group()) {
    const auto& w = report.witnesses.front();
    throw NotAGroup(std::string(w.kind == AxiomViolation::Associativity ? "associativity"
                                                                         : "unique solvability") +
                    " fails at " + render(w.tuple));
  }
  auto skew = skew_table(cube);
  return TernaryGroup(std::move(cube), std::move(skew));
}

TernaryGroup TernaryGroup::unchecked(TernaryCube cube, SkewTable skew) {
  if (skew.skew.size() != cube.order()) throw MalformedInput("skew table size does not match the cube");
  return TernaryGroup(std::move(cube), std::move(skew));
}

Element TernaryGroup::divide(Division kind, Element a, Element b, Element c) const {
  if (!cube_.contains(a) || !cube_.contains(b) || !cube_.contains(c))
    throw MalformedInput("element index out of range");
  switch (kind) {
    case Division::T: return Element{t(a.index, b.index, c.index)};
    case Division::L: return Element{t(a.index, c.index, b.index)};
    case Division::M: return Element{t(c.index, b.index, a.index)};
    case Division::R: return Element{t(b.index, a.index, c.index)};
  }
  return a;
}

std::optional<Reduction> is_reducible(const TernaryGroup& group) {
  const auto n = static_cast<std::uint32_t>(group.order());
  for (std::uint32_t e = 0; e < n; ++e) {
    if (group.mul(e, e, e) != e) continue;
    const auto ebar = group.bar(e);
    Reduction r{Element{e}, std::vector<Element>(std::size_t{n} * n)};
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) r.binary_table[x * n + y] = Element{group.mul(x, ebar, y)};
    bool derived = true;
    for (std::uint32_t a = 0; a < n && derived; ++a)
      for (std::uint32_t b = 0; b < n && derived; ++b) {
        const auto ab = r.binary_table[a * n + b].index;
        for (std::uint32_t c = 0; c < n; ++c)
          if (group.mul(a, b, c) != r.binary_table[ab * n + c].index) {
            derived = false;
            break;
          }
      }
    if (derived) return r;
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> check_t_axioms(const TernaryGroup& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        const auto abc = g.t(a, b, c);
        for (std::uint32_t d = 0; d < n; ++d) {
          const auto bcd = g.t(b, c, d);
          const auto abc_cd = g.t(abc, c, d);
          const auto first_rhs = g.t(g.t(a, b, bcd), bcd, d);
          const auto second_lhs = g.t(a, b, bcd);
          const auto second_rhs = g.t(a, abc, abc_cd);
          if (abc_cd != first_rhs || second_lhs != second_rhs) return elements({a, b, c, d});
        }
      }
  return std::nullopt;
}

std::optional<std::vector<Element>> check_division_contracts(const TernaryGroup& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        const Element ea{a}, eb{b}, ec{c};
        const auto l = g.divide(Division::L, ea, eb, ec).index;
        const auto m = g.divide(Division::M, ea, eb, ec).index;
        const auto r = g.divide(Division::R, ea, eb, ec).index;
        if (g.t(l, b, c) != a || g.t(a, m, c) != b || g.t(a, b, r) != c) return elements({a, b, c});
      }
  return std::nullopt;
}

namespace {

// Backtracking search for structure-preserving bijections. `on_found`
// returns false to stop the search.
void search_isomorphisms(const TernaryCube& from, const TernaryCube& to,
                         const std::function<bool(const std::vector<std::uint32_t>&)>& on_found) {
  const auto n = static_cast<std::uint32_t>(from.order());
  if (to.order() != n) return;
  std::vector<std::uint32_t> image(n, 0);
  std::vector<bool> used(n, false);
  bool stop = false;

  // Checks every triple involving element k whose product is already mapped.
  auto consistent = [&](std::uint32_t k) {
    for (std::uint32_t a = 0; a <= k; ++a)
      for (std::uint32_t b = 0; b <= k; ++b)
        for (std::uint32_t c = 0; c <= k; ++c) {
          if (a != k && b != k && c != k) continue;
          const auto p = from.at(a, b, c);
          if (p <= k && image[p] != to.at(image[a], image[b], image[c])) return false;
        }
    return true;
  };

  std::function<void(std::uint32_t)> extend = [&](std::uint32_t k) {
    if (stop) return;
    if (k == n) {
      // Triples whose product was assigned after all three arguments are
      // only checked here.
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          for (std::uint32_t c = 0; c < n; ++c)
            if (image[from.at(a, b, c)] != to.at(image[a], image[b], image[c])) return;
      if (!on_found(image)) stop = true;
      return;
    }
    for (std::uint32_t x = 0; x < n && !stop; ++x) {
      if (used[x]) continue;
      image[k] = x;
      used[x] = true;
      if (consistent(k)) extend(k + 1);
      used[x] = false;
    }
  };
  extend(0);
}

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(const TernaryCube& from,
                                                           const TernaryCube& to) {
  std::optional<std::vector<std::uint32_t>> result;
  search_isomorphisms(from, to, [&](const std::vector<std::uint32_t>& image) {
    result = image;
    return false;
  });
  return result;
}

std::vector<std::vector<std::uint32_t>> automorphisms(const TernaryCube& cube) {
  std::vector<std::vector<std::uint32_t>> all;
  search_isomorphisms(cube, cube, [&](const std::vector<std::uint32_t>& image) {
    all.push_back(image);
    return true;
  });
  return all;
}

TernaryCube cyclic_sum_cube(std::size_t n) {
  return TernaryCube::from_function(
      n, [n](auto a, auto b, auto c) { return (a + b + c) % n; }, "Z" + std::to_string(n) + " sum");
}

TernaryCube cyclic_shifted_cube(std::size_t n, std::size_t shift) {
  return TernaryCube::from_function(
      n, [n, shift](auto a, auto b, auto c) { return (a + b + c + shift) % n; },
      "Z" + std::to_string(n) + " sum+" + std::to_string(shift));
}

TernaryCube heap_cube(std::size_t n) {
  return TernaryCube::from_function(
      n, [n](auto a, auto b, auto c) { return (a + n - b + c) % n; },
      "Z" + std::to_string(n) + " heap");
}

TernaryCube constant_cube(std::size_t n, std::uint32_t value) {
  return TernaryCube::from_function(n, [value](auto, auto, auto) { return value; }, "constant");
}

}  // namespace ternhom
