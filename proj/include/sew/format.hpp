#pragma once

// Exact-to-text rendering shared by the table writers, the CLI and the
// tests. Rationals render as "p/q" in lowest terms; decimals are produced
// by exact integer scaling with ties rounded to even.

#include <string>

#include "sew/numeric.hpp"

namespace sew {

inline std::string rational_string(const rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

inline rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return rational(integer(s));
  return rational(integer(s.substr(0, slash)), integer(s.substr(slash + 1)));
}

// Fixed-point decimal with `digits` fraction digits, round-half-even.
inline std::string decimal_string(const rational& x, unsigned digits) {
  integer num = numerator(x);
  const integer& den = denominator(x);
  const bool negative = num < 0;
  if (negative) num = -num;
  integer scale = 1;
  for (unsigned k = 0; k < digits; ++k) scale *= 10;
  integer quot = num * scale / den;
  const integer rem = num * scale % den;
  const integer twice = 2 * rem;
  if (twice > den || (twice == den && (quot & 1) != 0)) ++quot;
  std::string text = quot.str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  if (digits > 0) text.insert(text.size() - digits, ".");
  if (negative && quot != 0) text.insert(0, "-");
  return text;
}

}  // namespace sew
