#pragma once

// Arbitrary-precision integers and rationals used throughout the library.
// Central exponents and infinite-factor syllable exponents grow with input
// length, so everything is unbounded by contract.

#include <boost/multiprecision/cpp_int.hpp>

namespace knotgt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division; cpp_int's operator/ truncates toward zero.
inline Int floor_div(const Int& a, const Int& m) {
  Int q = a / m;
  if (a % m != 0 && ((a < 0) != (m < 0))) {
    --q;
  }
  return q;
}

// Remainder matching floor_div: result lies in [0, m) for m > 0.
inline Int floor_mod(const Int& a, const Int& m) { return a - floor_div(a, m) * m; }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace knotgt
