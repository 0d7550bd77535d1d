#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ternhom {

using Integer = boost::multiprecision::cpp_int;

struct ExtendedGcd {
  Integer gcd;  // always >= 0
  Integer s;
  Integer t;    // s*a + t*b == gcd
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Residue in [0, |m|).
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += (m < 0 ? Integer(-m) : m);
  return r;
}

inline std::size_t bit_length(const Integer& a) {
  return a == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(a)) + 1;
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace ternhom
