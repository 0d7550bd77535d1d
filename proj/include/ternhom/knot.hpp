#pragma once

// Region colorings of braid closures and the homology classes they carry.
//
// A k-strand braid has k+1 regions (gaps) per level: gap 0 left of strand 1,
// gap i between strands i and i+1, gap k right of strand k. The letter +-i
// crosses strands i and i+1 and changes only gap i. With a, b, c the colors
// of gaps i-1, i, i+1 above the crossing, the new middle color is
//   positive: d = [a b^ c]   contributing +(a, b, c)
//   negative: d = [c b^ a]   contributing -(a, d, c)
// so each crossing contributes its relation triple (left, upper middle, right)
// or, read upward, (left, lower middle, right) with the crossing sign.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ternhom/chain.hpp"
#include "ternhom/config.hpp"
#include "ternhom/cube.hpp"
#include "ternhom/homology.hpp"

namespace ternhom {

struct BraidWord {
  std::size_t strands = 1;
  std::vector<int> letters;  // +-1 .. +-(strands-1)
  std::string name;

  BraidWord mirror() const;        // every letter negated
  std::string to_string() const;   // "[ 1, -2, 3 ]"
  bool operator==(const BraidWord&) const = default;
};

// "[1,-2,3]". strands defaults to max |index| + 1 (1 for the empty word).
// Throws ParseError on syntax errors and zero indices, MalformedInput when an
// index does not fit the given strand count.
BraidWord parse_braid(const std::string& text, std::optional<std::size_t> strands = std::nullopt);

struct RegionColoring {
  std::vector<Element> top_gaps;                  // strands + 1 colors
  std::vector<std::vector<Element>> level_gaps;   // gaps after each crossing
};

// Sweeps top to bottom; returns nothing when the bottom gaps differ from the top.
std::optional<RegionColoring> sweep_coloring(const TernaryGroup& group, const BraidWord& braid,
                                             const std::vector<Element>& top_gaps);

// All |X|^(strands+1) top assignments, in lexicographic order of top_gaps.
// Throws ResourceLimit above limits.max_assignments.
std::vector<RegionColoring> enumerate_colorings(const TernaryGroup& group, const BraidWord& braid,
                                                const ComputeLimits& limits = {});

struct KnotCycle {
  Chain chain{1};  // one signed triple per crossing, before cancellation of degenerate terms
};

// Throws ContractViolation if the result is not a cycle.
KnotCycle cycle_of_coloring(const TernaryGroup& group, const BraidWord& braid, const RegionColoring& coloring);

struct KnotReport {
  std::string name;
  BraidWord braid;
  std::size_t total = 0;
  std::map<ClassCoordinates, std::size_t> class_histogram;
  std::size_t order3_count = 0;  // colorings whose class has order exactly 3
};

KnotReport invariant_report(HomologyCalculator& homology, const BraidWord& braid);
KnotReport invariant_report(const TernaryGroup& group, const BraidWord& braid, const ComputeLimits& limits = {});

struct KnotTableEntry {
  std::string name;  // "3_1", "8_18", ...
  std::string braid;
  std::size_t published_total;
  std::size_t published_order3;
};

// The 25 knots with their braid words and published counts over the
// six-element cube from triangle(2,2,3).
const std::vector<KnotTableEntry>& knot_table();

}  // namespace ternhom
