#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
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

Chain trefoil_cycle() {
  Chain z(1);
  for (auto t : {Tuple::one_based({3, 2, 1}), Tuple::one_based({3, 6, 1}), Tuple::one_based({3, 4, 1})}) z.add(t, 1);
  return z;
}

std::map<ClassCoordinates, std::size_t> negated(const std::map<ClassCoordinates, std::size_t>& h) {
  std::map<ClassCoordinates, std::size_t> out;
  for (const auto& [c, n] : h) out[-c] += n;
  return out;
}

}  // namespace

TEST_CASE("braid parsing") {
  const auto trefoil = parse_braid("[ 1, 1, 1 ]");
  CHECK(trefoil.strands == 2);
  CHECK(trefoil.letters == std::vector<int>{1, 1, 1});
  CHECK(trefoil.to_string() == "[ 1, 1, 1 ]");

  const auto k818 = parse_braid("[1,-2,1,-2,1,-2,1,-2]");
  CHECK(k818.strands == 3);
  CHECK(k818.letters.size() == 8);

  const auto unknot = parse_braid("[]", 1);
  CHECK(unknot.strands == 1);
  CHECK(unknot.letters.empty());
  CHECK(parse_braid("[ ]").strands == 1);
  CHECK(parse_braid("[1]", 4).strands == 4);

  CHECK_THROWS_AS(parse_braid("[1,,2]"), ParseError);
  CHECK_THROWS_AS(parse_braid("[0]"), ParseError);
  CHECK_THROWS_AS(parse_braid("1,2"), ParseError);
  CHECK_THROWS_AS(parse_braid("[1,2"), ParseError);
  CHECK_THROWS_AS(parse_braid("[1] x"), ParseError);
  CHECK_THROWS_AS(parse_braid("[7]", 2), MalformedInput);

  const auto m = trefoil.mirror();
  CHECK(m.letters == std::vector<int>{-1, -1, -1});
  CHECK(m.strands == 2);
  CHECK(m.mirror().letters == trefoil.letters);
}

TEST_CASE("sweeps") {
  const auto& g = printed();
  const auto trefoil = parse_braid("[1,1,1]");
  std::size_t closed = 0;
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b)
      for (std::uint32_t c = 0; c < 6; ++c) {
        const auto col = sweep_coloring(g, trefoil, {Element{a}, Element{b}, Element{c}});
        if (!col) continue;
        ++closed;
        REQUIRE(col->level_gaps.size() == 3);
        for (const auto& level : col->level_gaps) {
          CHECK(level.front() == Element{a});
          CHECK(level.back() == Element{c});
        }
        CHECK(col->level_gaps.back() == col->top_gaps);
      }
  CHECK(closed == 72);
  CHECK(216 - closed == 144);

  const auto empty = parse_braid("[]", 1);
  CHECK(sweep_coloring(g, empty, {Element{2}, Element{4}}).has_value());
  CHECK_THROWS_AS(sweep_coloring(g, trefoil, {Element{0}, Element{1}}), MalformedInput);
}

TEST_CASE("coloring counts") {
  const auto& g = printed();
  CHECK(enumerate_colorings(g, parse_braid("[]", 1)).size() == 36);
  CHECK(enumerate_colorings(g, parse_braid("[1,1,1]")).size() == 72);
  CHECK(enumerate_colorings(g, parse_braid("[1,-2,1,-2,1,-2,1,-2]")).size() == 180);

  const auto all = enumerate_colorings(g, parse_braid("[1,1,1]"));
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].top_gaps < all[i].top_gaps);

  ComputeLimits par;
  par.jobs = 3;
  const auto p = enumerate_colorings(g, parse_braid("[1,-2,1,-2,1,-2,1,-2]"), par);
  const auto s = enumerate_colorings(g, parse_braid("[1,-2,1,-2,1,-2,1,-2]"));
  REQUIRE(p.size() == s.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[i].top_gaps == s[i].top_gaps);

  ComputeLimits tiny;
  tiny.max_assignments = 100;
  CHECK_THROWS_AS(enumerate_colorings(g, parse_braid("[1,1,1]"), tiny), ResourceLimit);
}

TEST_CASE("coloring cycles") {
  const auto& g = printed();
  SUBCASE("the trefoil cycle is realized") {
    const auto trefoil = parse_braid("[1,1,1]");
    bool found = false;
    for (const auto& col : enumerate_colorings(g, trefoil)) {
      const auto cycle = cycle_of_coloring(g, trefoil, col);
      CHECK(project_to_quotient(g, boundary(g, cycle.chain)).is_zero());
      found = found || cycle.chain == trefoil_cycle();
    }
    CHECK(found);
  }
  SUBCASE("empty braid gives zero chains") {
    const auto empty = parse_braid("[]", 1);
    for (const auto& col : enumerate_colorings(g, empty)) CHECK(cycle_of_coloring(g, empty, col).chain.is_zero());
  }
  SUBCASE("a single crossing gives degenerate triples") {
    const auto kink = parse_braid("[1]");
    const auto kink_neg = parse_braid("[-1]");
    for (const auto& braid : {kink, kink_neg})
      for (const auto& col : enumerate_colorings(g, braid)) {
        const auto c = cycle_of_coloring(g, braid, col).chain;
        CHECK(c.terms().size() == 1);
        CHECK(project_to_quotient(g, c).is_zero());
      }
  }
  SUBCASE("mirror negates classes") {
    const auto trefoil = parse_braid("[1,1,1]");
    const auto mirror = trefoil.mirror();
    HomologyCalculator calc(g);
    const auto a = invariant_report(calc, trefoil);
    const auto b = invariant_report(calc, mirror);
    CHECK(a.total == b.total);
    CHECK(a.order3_count == b.order3_count);
    CHECK(negated(b.class_histogram) == a.class_histogram);
  }
}

TEST_CASE("reports") {
  HomologyCalculator calc(printed());
  const auto r = invariant_report(calc, parse_braid("[1,1,1]"));
  CHECK(r.total == 72);
  CHECK(r.order3_count == 36);
  std::size_t sum = 0;
  for (const auto& [c, n] : r.class_histogram) sum += n;
  CHECK(sum == 72);

  SUBCASE("Markov stabilization and cancelling pairs") {
    for (const char* text : {"[1,1,1,2]", "[1,1,1,-2]", "[1,1,1,2,-2,2]", "[1,-1,1,1,1]", "[1,1,2,-2,1,2]"}) {
      INFO(std::string(text));
      const auto s = invariant_report(calc, parse_braid(text));
      CHECK(s.total == r.total);
      CHECK(s.class_histogram == r.class_histogram);
    }
  }

  SUBCASE("a split unknot multiplies every count by |X|") {
    // sigma_2 sigma_2^-1 cancels in B_3, leaving the trefoil beside a free circle.
    for (const char* text : {"[1,1,1,2,-2]", "[2,-2,1,1,1]"}) {
      INFO(std::string(text));
      const auto s = invariant_report(calc, parse_braid(text));
      CHECK(s.total == 6 * r.total);
      CHECK(s.order3_count == 6 * r.order3_count);
      for (const auto& [c, n] : s.class_histogram) CHECK(n == 6 * r.class_histogram.at(c));
    }
  }

  SUBCASE("relabeling the cube") {
    const auto cube = fixtures::printed_cube();
    const auto figure_eight = invariant_report(calc, parse_braid("[1,-2,1,-2]"));
    for (const auto& a : automorphisms(cube)) {
      const auto h = TernaryGroup::verified(cube.relabeled(a));
      const auto s = invariant_report(h, parse_braid("[1,-2,1,-2]"));
      CHECK(s.total == figure_eight.total);
      CHECK(s.order3_count == figure_eight.order3_count);
    }
    std::vector<std::uint32_t> perm{4, 0, 5, 2, 1, 3};
    const auto h = TernaryGroup::verified(cube.relabeled(perm));
    const auto s = invariant_report(h, parse_braid("[1,1,1]"));
    CHECK(s.total == r.total);
    CHECK(s.order3_count == r.order3_count);
  }
}

TEST_CASE("knot table") {
  const auto& table = knot_table();
  REQUIRE(table.size() == 25);
  CHECK(table.front().name == "3_1");
  CHECK(parse_braid(table.front().braid).letters == std::vector<int>{1, 1, 1});
  CHECK(table.back().name == "9_48");
  std::size_t big = 0;
  for (const auto& e : table) {
    CHECK_NOTHROW(parse_braid(e.braid));
    big += e.published_total == 180;
  }
  CHECK(big == 6);
}
