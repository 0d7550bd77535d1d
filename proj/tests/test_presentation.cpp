#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ternhom/errors.hpp"
#include "ternhom/presentation.hpp"

using namespace ternhom;

TEST_CASE("parsing") {
  const auto p = parse_presentation("a,b,c | a^2, b^2, c^2, (ab)^2, (bc)^3, (ca)^2");
  CHECK(p.generators == std::vector<char>{'a', 'b', 'c'});
  REQUIRE(p.relators.size() == 6);
  CHECK(p.relators[3].size() == 4);
  CHECK(p.relators[4].size() == 6);
  CHECK(p.render(p.relators[5]) == "caca");
  CHECK(p.relators == triangle_presentation(2, 2, 3).relators);

  const auto z2 = parse_presentation("a | a^2");
  CHECK(z2.generators.size() == 1);
  REQUIRE(z2.relators.size() == 1);
  CHECK(z2.relators[0].size() == 2);

  const auto inv = parse_presentation("a,b | a^-1 b*a = b, 1");
  REQUIRE(inv.relators.size() == 2);
  CHECK(inv.relators[0].size() == 4);
  CHECK(inv.relators[0][0] == Letter{0, true});
  CHECK(inv.relators[1].empty());

  SUBCASE("syntax errors report a 1-based column") {
    try {
      parse_presentation("a,b | (ab");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_presentation("a,b | x^2"), ParseError);
    CHECK_THROWS_AS(parse_presentation("a,a | a"), ParseError);
    CHECK_THROWS_AS(parse_presentation("a | a^"), ParseError);
    CHECK_THROWS_AS(parse_presentation("a  a^2"), ParseError);
  }
}

TEST_CASE("parity") {
  for (auto [l, m, n] : {std::tuple{2u, 2u, 3u}, {3u, 5u, 7u}, {2u, 3u, 3u}})
    CHECK(parity_well_defined(triangle_presentation(l, m, n)));
  CHECK_FALSE(parity_well_defined(parse_presentation("a,b,c | abc")));
  CHECK(parity_well_defined(parse_presentation("a,b,c | a b a^-1 c^-1")));
}

TEST_CASE("coset enumeration orders") {
  CHECK(coset_enumerate(parse_presentation("a | a^2")).order == 2);
  CHECK(coset_enumerate(triangle_presentation(2, 2, 3)).order == 12);
  CHECK(coset_enumerate(triangle_presentation(2, 2, 2)).order == 8);
  CHECK(coset_enumerate(triangle_presentation(2, 3, 3)).order == 24);
  CHECK(coset_enumerate(parse_presentation("a,b | a^3, b^2, abab")).order == 6);
  CHECK_THROWS_AS(coset_enumerate(parse_presentation("a | 1"), 200), ResourceLimit);
  CHECK_THROWS_AS(coset_enumerate(triangle_presentation(2, 3, 7), 5000), ResourceLimit);
}

TEST_CASE("labels are shortlex words") {
  const auto g = coset_enumerate(triangle_presentation(2, 2, 3));
  REQUIRE(g.labels.size() == 12);
  CHECK(g.labels[0].empty());
  CHECK(g.labels[1] == "a");
  CHECK(g.labels[2] == "b");
  CHECK(g.labels[3] == "c");
  for (std::size_t i = 1; i < g.labels.size(); ++i)
    CHECK((g.labels[i - 1].size() < g.labels[i].size() ||
           (g.labels[i - 1].size() == g.labels[i].size() && g.labels[i - 1] < g.labels[i])));
}

TEST_CASE("relator order does not change the group") {
  std::mt19937 rng(11);
  for (auto [l, m, n] : {std::tuple{2u, 2u, 3u}, {2u, 2u, 5u}, {2u, 3u, 3u}}) {
    const auto p = triangle_presentation(l, m, n);
    const auto base = coset_enumerate(p);
    for (int trial = 0; trial < 4; ++trial) {
      auto q = p;
      std::shuffle(q.relators.begin(), q.relators.end(), rng);
      const auto g = coset_enumerate(q);
      CHECK(g.order == base.order);
      CHECK(g.cayley == base.cayley);
      CHECK(g.labels == base.labels);
    }
  }
}

TEST_CASE("odd-even construction") {
  struct Case {
    unsigned l, m, n;
    std::size_t odd;
  };
  for (auto c : {Case{2, 2, 2, 4}, Case{2, 2, 3, 6}, Case{2, 2, 4, 8}, Case{2, 2, 5, 10}, Case{2, 2, 6, 12},
                 Case{2, 3, 3, 12}}) {
    INFO(c.l, c.m, c.n);
    const auto g = coset_enumerate(triangle_presentation(c.l, c.m, c.n));
    REQUIRE(g.parity.has_value());
    const auto split = odd_even_split(g);
    CHECK(split.odd.order() == c.odd);
    CHECK(split.even.order == g.order - c.odd);
    CHECK(verify_group(split.odd).is_group());

    // Parity is a homomorphism.
    for (std::uint32_t x = 0; x < g.order; ++x)
      for (std::uint32_t y = 0; y < g.order; ++y)
        CHECK((*g.parity)[g.mul(x, y)] == ((*g.parity)[x] ^ (*g.parity)[y]));

    // The cube product is the group product of odd elements.
    const auto& el = split.odd_elements;
    for (std::uint32_t x = 0; x < el.size(); ++x)
      for (std::uint32_t y = 0; y < el.size(); ++y)
        for (std::uint32_t z = 0; z < el.size(); ++z)
          CHECK(el[split.odd.at(x, y, z)] == g.mul(g.mul(el[x], el[y]), el[z]));
  }

  const auto s3 = odd_even_split(symmetric_group(3));
  CHECK(s3.odd.order() == 3);
  CHECK(verify_group(s3.odd).is_group());
  CHECK(symmetric_group(4).order == 24);
  CHECK(odd_even_split(symmetric_group(4)).odd.order() == 12);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(odd_even_from_presentation(parse_presentation("a | a^3")), StructuralError);
  auto trivial = coset_enumerate(parse_presentation("a | a^2, a^2"));
  trivial.parity = std::vector<std::uint8_t>(trivial.order, 0);
  CHECK_THROWS_AS(odd_even_split(trivial), StructuralError);
  trivial.parity.reset();
  CHECK_THROWS_AS(odd_even_split(trivial), StructuralError);
}

TEST_CASE("triangle cube matches the printed cube up to relabeling") {
  const auto built = triangle_cube(2, 2, 3);
  CHECK(built.name() == "O(triangle(2,2,3))");
  const auto phi = find_isomorphism(built, fixtures::printed_cube());
  REQUIRE(phi.has_value());
  // Under the printed numbering the labels are 1) c 2) a 3) b 4) acb 5) bcb 6) abc.
  const auto split = odd_even_from_presentation(triangle_presentation(2, 2, 3));
  const std::vector<std::string> printed_words{"c", "a", "b", "acb", "bcb", "abc"};
  const auto g = coset_enumerate(triangle_presentation(2, 2, 3));
  auto element_of = [&](const std::string& w) {
    std::uint32_t x = 0;
    for (char ch : w) x = g.mul(x, g.generator_images[static_cast<std::size_t>(ch - 'a')]);
    return x;
  };
  // The printed numbering is itself an isomorphism target: map each odd element
  // to the position of its word and compare with the printed table.
  std::vector<std::uint32_t> by_word(split.odd.order());
  for (std::uint32_t i = 0; i < split.odd.order(); ++i) {
    const auto it = std::find_if(printed_words.begin(), printed_words.end(),
                                 [&](const std::string& w) { return element_of(w) == split.odd_elements[i]; });
    REQUIRE(it != printed_words.end());
    by_word[i] = static_cast<std::uint32_t>(it - printed_words.begin());
  }
  CHECK(split.odd.relabeled(by_word) == fixtures::printed_cube());
}
