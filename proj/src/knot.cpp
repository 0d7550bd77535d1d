#include "ternhom/knot.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "ternhom/errors.hpp"
#include "ternhom/parallel.hpp"

namespace ternhom {

BraidWord BraidWord::mirror() const {
  BraidWord out = *this;
  for (auto& x : out.letters) x = -x;
  if (!out.name.empty()) out.name += "*";
  return out;
}

std::string BraidWord::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? ", " : " ") + std::to_string(letters[i]);
  return out + (letters.empty() ? "]" : " ]");
}

BraidWord parse_braid(const std::string& text, std::optional<std::size_t> strands) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos + 1);
    ++pos;
  };

  BraidWord w;
  expect('[');
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      skip();
      const std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      const std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits) throw ParseError("expected a crossing index", start + 1);
      if (pos - digits > 6) throw ParseError("crossing index too large", start + 1);
      const int value = std::stoi(text.substr(start, pos - start));
      if (value == 0) throw ParseError("crossing index 0 is not a braid generator", start + 1);
      w.letters.push_back(value);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("unexpected text after braid word", pos + 1);

  std::size_t needed = 1;
  for (int x : w.letters) needed = std::max<std::size_t>(needed, static_cast<std::size_t>(std::abs(x)) + 1);
  if (strands) {
    if (*strands == 0) throw MalformedInput("a braid needs at least one strand");
    for (int x : w.letters)
      if (static_cast<std::size_t>(std::abs(x)) >= *strands)
        throw MalformedInput("crossing " + std::to_string(x) + " needs more than " + std::to_string(*strands) +
                             " strands");
    w.strands = *strands;
  } else {
    w.strands = needed;
  }
  return w;
}

namespace {

void check_braid(const BraidWord& braid) {
  if (braid.strands == 0) throw MalformedInput("a braid needs at least one strand");
  for (int x : braid.letters)
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) >= braid.strands)
      throw MalformedInput("braid letter " + std::to_string(x) + " is out of range");
}

// Sweeps raw gap colors in place; records levels when asked.
template <typename Record>
void sweep(const TernaryGroup& g, const BraidWord& braid, std::vector<std::uint32_t>& gaps, Record&& record) {
  for (int x : braid.letters) {
    const std::size_t i = static_cast<std::size_t>(std::abs(x));
    const auto a = gaps[i - 1], b = gaps[i], c = gaps[i + 1];
    gaps[i] = x > 0 ? g.t(a, b, c) : g.t(c, b, a);
    record(gaps);
  }
}

}  // namespace

std::optional<RegionColoring> sweep_coloring(const TernaryGroup& group, const BraidWord& braid,
                                             const std::vector<Element>& top_gaps) {
  check_braid(braid);
  if (top_gaps.size() != braid.strands + 1)
    throw MalformedInput("a " + std::to_string(braid.strands) + "-strand braid has " +
                         std::to_string(braid.strands + 1) + " gaps");
  std::vector<std::uint32_t> gaps;
  for (auto e : top_gaps) {
    if (e.index >= group.order()) throw MalformedInput("gap color out of range");
    gaps.push_back(e.index);
  }
  RegionColoring out{top_gaps, {}};
  sweep(group, braid, gaps, [&](const std::vector<std::uint32_t>& level) {
    std::vector<Element> row;
    for (auto v : level) row.push_back(Element{v});
    out.level_gaps.push_back(std::move(row));
  });
  for (std::size_t k = 0; k < gaps.size(); ++k)
    if (gaps[k] != top_gaps[k].index) return std::nullopt;
  return out;
}

std::vector<RegionColoring> enumerate_colorings(const TernaryGroup& group, const BraidWord& braid,
                                                const ComputeLimits& limits) {
  check_braid(braid);
  const std::size_t n = group.order();
  const std::size_t width = braid.strands + 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < width; ++k) {
    if (total > limits.max_assignments / std::max<std::size_t>(n, 1))
      throw ResourceLimit("more than " + std::to_string(limits.max_assignments) + " top assignments");
    total *= n;
  }

  const unsigned jobs = std::max(1u, limits.jobs);
  std::vector<std::vector<std::vector<std::uint32_t>>> found(jobs);
  parallel_chunks(total, jobs, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::vector<std::uint32_t> top(width), gaps(width);
    for (std::size_t code = begin; code < end; ++code) {
      std::size_t rest = code;
      for (std::size_t k = width; k-- > 0;) {
        top[k] = static_cast<std::uint32_t>(rest % n);
        rest /= n;
      }
      gaps = top;
      sweep(group, braid, gaps, [](const auto&) {});
      if (gaps == top) found[chunk].push_back(top);
    }
  });

  std::vector<RegionColoring> out;
  for (const auto& part : found)
    for (const auto& top : part) {
      std::vector<Element> t;
      for (auto v : top) t.push_back(Element{v});
      out.push_back(*sweep_coloring(group, braid, t));
    }
  return out;
}

KnotCycle cycle_of_coloring(const TernaryGroup& group, const BraidWord& braid, const RegionColoring& coloring) {
  check_braid(braid);
  if (coloring.level_gaps.size() != braid.letters.size() || coloring.top_gaps.size() != braid.strands + 1)
    throw MalformedInput("coloring does not match the braid");
  KnotCycle out;
  const std::vector<Element>* above = &coloring.top_gaps;
  for (std::size_t step = 0; step < braid.letters.size(); ++step) {
    const int x = braid.letters[step];
    const std::size_t i = static_cast<std::size_t>(std::abs(x));
    const auto& below = coloring.level_gaps[step];
    const auto a = (*above)[i - 1].index, c = (*above)[i + 1].index;
    if (x > 0)
      out.chain.add(Tuple::of({a, (*above)[i].index, c}), 1);
    else
      out.chain.add(Tuple::of({a, below[i].index, c}), -1);
    above = &below;
  }
  if (!project_to_quotient(group, boundary(group, out.chain)).is_zero())
    throw ContractViolation("coloring cycle " + out.chain.to_string() + " has nonzero boundary");
  return out;
}

KnotReport invariant_report(HomologyCalculator& homology, const BraidWord& braid) {
  const auto& group = homology.group();
  KnotReport report;
  report.name = braid.name;
  report.braid = braid;
  const auto colorings = enumerate_colorings(group, braid, homology.limits());
  report.total = colorings.size();
  for (const auto& coloring : colorings) {
    const auto cls = homology.class_of(cycle_of_coloring(group, braid, coloring).chain);
    if (cls.additive_order() == 3) ++report.order3_count;
    ++report.class_histogram[cls];
  }
  return report;
}

KnotReport invariant_report(const TernaryGroup& group, const BraidWord& braid, const ComputeLimits& limits) {
  HomologyCalculator homology(group, limits);
  return invariant_report(homology, braid);
}

}  // namespace ternhom
