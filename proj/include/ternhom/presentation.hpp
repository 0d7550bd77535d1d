#pragma once

// Finite group presentations, their realization by coset enumeration, and the
// odd-even construction of a ternary group from the odd-length elements.
//
// Mini-language:  generators | relators
//   "a,b,c | a^2, b^2, c^2, (ab)^2, (bc)^3, (ca)^2"
// Generators are single letters. A relator is a product of factors, a factor
// is a letter or a parenthesized product, optionally raised to an integer
// power (negative powers invert). '*' between factors is optional, "1" is the
// empty word, and "u=v=w" yields the relators u v^-1 and v w^-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternhom/cube.hpp"

namespace ternhom {

struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct GroupPresentation {
  std::vector<char> generators;
  std::vector<Word> relators;

  std::string render(const Word& w) const;
  std::string to_string() const;
};

GroupPresentation parse_presentation(const std::string& text);

// Presentation of the triangle group a^2 = b^2 = c^2 = (ab)^l = (bc)^n = (ca)^m = 1.
GroupPresentation triangle_presentation(unsigned l, unsigned m, unsigned n);

// True iff every relator has even length, so word-length parity is well
// defined on the group.
bool parity_well_defined(const GroupPresentation& p);

// A finite group given by its Cayley table. Element 0 is the identity and
// elements are numbered by their shortlex-least positive word in the
// generators (ties by generator order); labels[x] is that word.
struct FiniteBinaryGroup {
  std::size_t order = 0;
  std::vector<std::uint32_t> cayley;  // order^2, x*y at x*order + y
  std::vector<char> generator_names;
  std::vector<std::uint32_t> generator_images;
  std::vector<std::string> labels;
  std::optional<std::vector<std::uint8_t>> parity;  // 1 = odd

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return cayley[x * order + y]; }
};

// Todd–Coxeter (HLT strategy) over the trivial subgroup. The parity map is
// attached when parity_well_defined(p) holds. Throws ResourceLimit when more
// than max_cosets cosets are allocated.
FiniteBinaryGroup coset_enumerate(const GroupPresentation& p, std::size_t max_cosets = 100000);

// S_k generated by the adjacent transpositions s1 = (1 2), ..., with parity = sign.
FiniteBinaryGroup symmetric_group(unsigned k);

struct OddEvenSplit {
  TernaryCube odd;                     // [xyz] = xyz on odd elements
  std::vector<std::string> odd_labels; // word per odd element, cube order
  std::vector<std::uint32_t> odd_elements;  // index in the source group
  FiniteBinaryGroup even;              // even elements, contains the identity
};

// Throws StructuralError when the group has no parity map or no odd element.
OddEvenSplit odd_even_split(const FiniteBinaryGroup& g);

// Convenience: presentation -> enumeration -> odd cube. Throws StructuralError
// when parity is not well defined.
OddEvenSplit odd_even_from_presentation(const GroupPresentation& p, std::size_t max_cosets = 100000);

// O(triangle(l,m,n)), named "O(triangle(l,m,n))".
TernaryCube triangle_cube(unsigned l, unsigned m, unsigned n, std::size_t max_cosets = 100000);

}  // namespace ternhom
