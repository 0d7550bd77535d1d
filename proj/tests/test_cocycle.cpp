#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "ternhom/cocycle.hpp"
#include "ternhom/errors.hpp"
#include "ternhom/homology.hpp"
#include "ternhom/knot.hpp"
#include "ternhom/presentation.hpp"

using namespace ternhom;

namespace {

const TernaryGroup& printed() {
  static const auto g = TernaryGroup::verified(fixtures::printed_cube());
  return g;
}

CocycleFunction random_coboundary(const TernaryGroup& g, std::uint64_t m, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> v(0, static_cast<std::int64_t>(m) - 1);
  std::vector<std::int64_t> values(g.order() * g.order());
  for (auto& x : values) x = v(rng);
  return coboundary_of(g, m, values);
}

// Rank mod p of a generating set, by the oracle's elimination.
std::size_t span_rank(const std::vector<CocycleFunction>& fs, std::size_t n, std::int64_t p) {
  oracle::Dense d{fs.size(), n * n * n, std::vector<std::int64_t>(fs.size() * n * n * n)};
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          d.at(i, (a * n + b) * n + c) = static_cast<std::int64_t>(fs[i].value(a, b, c));
  return oracle::rank_mod_p(d, p);
}

}  // namespace

TEST_CASE("cochain arithmetic") {
  CocycleFunction f(5, 2);
  f.set(0, 1, 1, 7);
  f.set(1, 0, 1, -1);
  CHECK(f.value(0, 1, 1) == 2);
  CHECK(f.value(1, 0, 1) == 4);
  CHECK((f * 5).is_zero());
  CHECK((f + f).value(0, 1, 1) == 4);
  Chain c(1);
  c.add(Tuple::of({0, 1, 1}), 3);
  c.add(Tuple::of({1, 0, 1}), -2);
  CHECK(f.evaluate(c) == 3);  // 6 - 8 mod 5
  CHECK_THROWS_AS(CocycleFunction(1, 3), MalformedInput);
}

TEST_CASE("coboundaries are cocycles") {
  std::mt19937 rng(41);
  for (const auto& [name, cube] : fixtures::test_cubes(6)) {
    INFO(name);
    const auto g = TernaryGroup::verified(cube);
    for (std::uint64_t m : {2u, 3u, 9u}) {
      CHECK_FALSE(cocycle_violation(g, CocycleFunction(m, g.order())).has_value());
      CHECK_FALSE(cocycle_violation(g, random_coboundary(g, m, rng)).has_value());
    }
  }
  const auto zero = coboundary_of(printed(), 3, std::vector<std::int64_t>(36, 0));
  CHECK(zero.is_zero());
}

TEST_CASE("violations are reported") {
  const auto& g = printed();
  CocycleFunction f(3, 6);
  f.set(2, 1, 0, 1);  // one non-degenerate triple
  const auto v = cocycle_violation(g, f);
  REQUIRE(v.has_value());
  CHECK(v->degree() == 2);

  CocycleFunction d(3, 6);
  d.set(0, 1, 0, 1);  // (1,2,1) is degenerate
  const auto w = cocycle_violation(g, d);
  REQUIRE(w.has_value());
  CHECK(*w == Tuple::one_based({1, 2, 1}));
}

TEST_CASE("cocycle and coboundary spaces") {
  const auto& g = printed();
  HomologyCalculator calc(g);

  for (std::uint64_t m : {2u, 3u, 5u, 9u}) {
    INFO("m = ", m);
    const auto z = cocycle_space(calc, m);
    const auto b = coboundary_space(calc, m);
    REQUIRE(z.size() == z.orders.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
      CHECK_FALSE(cocycle_violation(g, z.generators[i]).has_value());
      CHECK_FALSE(z.generators[i].is_zero());
      CHECK((z.generators[i] * static_cast<std::int64_t>(z.orders[i])).is_zero());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK_FALSE(cocycle_violation(g, b.generators[i]).has_value());
      CHECK((b.generators[i] * static_cast<std::int64_t>(b.orders[i])).is_zero());
    }

    if (m == 2 || m == 3 || m == 5) {
      const auto p = static_cast<std::int64_t>(m);
      // Oracle: the cocycles are the kernel of the transpose of d_2 mod p,
      // the coboundaries the row space of the transpose of d_1.
      const oracle::Cube x(fixtures::printed_cube());
      const auto d2 = oracle::quotient_boundary(x, 2);
      const auto d1 = oracle::quotient_boundary(x, 1);
      const std::size_t cocycle_dim = d2.rows - oracle::rank_mod_p(d2, p);
      const std::size_t coboundary_dim = oracle::rank_mod_p(d1, p);
      CHECK(z.size() == cocycle_dim);
      CHECK(span_rank(z.generators, 6, p) == cocycle_dim);
      CHECK(b.size() == coboundary_dim);
      CHECK(span_rank(b.generators, 6, p) == coboundary_dim);

      // Containment: adding the coboundaries does not enlarge the span.
      auto both = z.generators;
      both.insert(both.end(), b.generators.begin(), b.generators.end());
      CHECK(span_rank(both, 6, p) == cocycle_dim);
    }
  }

  SUBCASE("regression dimensions for m = 3") {
    CHECK(cocycle_space(calc, 3).size() == 35);
    CHECK(coboundary_space(calc, 3).size() == 28);
  }
  SUBCASE("order-1 cube") {
    const auto one = TernaryGroup::verified(cyclic_sum_cube(1));
    CHECK(coboundary_space(one, 3).size() == 0);
    CHECK(cocycle_space(one, 3).size() == 0);
  }
}

TEST_CASE("state sums") {
  const auto& g = printed();
  const auto trefoil = parse_braid("[1,1,1]");
  std::mt19937 rng(43);

  CHECK(state_sum(g, trefoil, CocycleFunction(3, 6)).counts == std::vector<std::size_t>{72, 0, 0});
  CHECK(state_sum(g, trefoil, CocycleFunction(3, 6)).to_string() == "72");
  for (int i = 0; i < 5; ++i)
    CHECK(state_sum(g, trefoil, random_coboundary(g, 3, rng)).counts == std::vector<std::size_t>{72, 0, 0});

  CocycleFunction bad(3, 6);
  bad.set(2, 1, 0, 1);
  CHECK_THROWS_AS(state_sum(g, trefoil, bad), ContractViolation);

  HomologyCalculator calc(g);

  SUBCASE("mod 3 cocycles see nothing on the trefoil") {
    // The trefoil class is 3 times a generator of Z_9, so every map to Z_3 kills it.
    for (const auto& f : cocycle_space(calc, 3).generators) CHECK(state_sum(g, trefoil, f).counts[0] == 72);
  }

  SUBCASE("a mod 9 cocycle splits the trefoil colorings 36/36") {
    bool split = false;
    for (const auto& f : cocycle_space(calc, 9).generators) {
      const auto s = state_sum(g, trefoil, f);
      CHECK(s.total() == 72);
      if (s.counts[0] == 36) {
        split = true;
        std::size_t order3 = 0;
        for (std::size_t r = 1; r < 9; ++r)
          if (r % 3 == 0) order3 += s.counts[r];
        CHECK(order3 == 36);
      }
    }
    CHECK(split);
  }

  SUBCASE("invariance under coboundaries and stabilization") {
    const auto z9 = cocycle_space(calc, 9);
    for (std::size_t i = 0; i < z9.size(); i += 5) {
      const auto& f = z9.generators[i];
      const auto base = state_sum(g, trefoil, f);
      for (int k = 0; k < 3; ++k) CHECK(state_sum(g, trefoil, f + random_coboundary(g, 9, rng)) == base);
      CHECK(state_sum(g, parse_braid("[1,1,1,2]"), f) == base);
      CHECK(state_sum(g, parse_braid("[1,1,1,2,-2,2]"), f) == base);
    }
  }
}

TEST_CASE("state sum text") {
  StateSum s{9, {36, 0, 0, 18, 0, 0, 18, 0, 0}};
  CHECK(s.to_string() == "36 + 18 t^3 + 18 t^6");
  CHECK(s.total() == 72);
  StateSum t{3, {0, 5, 0}};
  CHECK(t.to_string() == "5 t");
}
