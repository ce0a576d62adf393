#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sew {

// Every quantity in this library is an exact integer or an exact rational;
// nothing is ever evaluated in floating point.
using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Quotient of a/b rounded toward negative infinity. b must be nonzero.
inline integer floor_div(const integer& a, const integer& b) {
  integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

// Remainder of a modulo b in [0, b). b must be positive.
inline integer floor_mod(const integer& a, const integer& b) {
  integer r = a % b;
  if (r < 0) r += b;
  return r;
}

// Fractional part x - floor(x), always in [0, 1); frac(-17/3) = 1/3.
inline rational frac(const rational& x) {
  return x - rational(floor_div(numerator(x), denominator(x)));
}

// Converts a rational known to be integral; throws if it is not.
inline integer to_integer(const rational& x) {
  if (denominator(x) != 1)
    throw std::logic_error("expected an integral value, got " + x.str());
  return numerator(x);
}

}  // namespace sew
