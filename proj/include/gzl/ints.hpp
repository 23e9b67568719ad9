// Exact arithmetic aliases used throughout: arbitrary-precision integers for
// polynomial coefficients, exact rationals for polytope coordinates.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gzl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// ceil(p/q) for exact rationals
inline Int rat_ceil(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;                  // truncates toward zero
  if (num > 0 && q * den != num) ++q; // positive non-integer rounds up
  return q;
}

inline int to_int(const Int& v) {
  if (v > (std::numeric_limits<int>::max)() || v < (std::numeric_limits<int>::min)())
    throw std::overflow_error("gzl: integer out of int range: " + v.str());
  return static_cast<int>(v);
}

} // namespace gzl
