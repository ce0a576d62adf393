#pragma once

// Closed forms for the q-weights of branch points: the Dedekind-type
// fractional-part sum D, the W1/W2/W3 decomposition, the affine branch
// weight and its four special cases, the point-at-infinity weight for
// coprime (n, d), and the assembled branch-weight report. Everything is
// evaluated in exact rationals and asserted integral before returning.

#include <optional>

#include "sew/curve.hpp"
#include "sew/error.hpp"
#include "sew/numeric.hpp"

namespace sew {

// D(a, b, c) = sum_{j=0}^{c-1} frac((a + bj)/c) * j. The fractional part
// uses floor toward -inf, so every term lies in [0, 1) and the result has
// denominator dividing c.
inline rational fractional_part_sum(const integer& a, const integer& b,
                                    const integer& c) {
  if (c < 1) fail(errc::modulus_out_of_range, "require c >= 1");
  integer num = 0;
  for (integer j = 0; j < c; ++j) num += floor_mod(a + b * j, c) * j;
  return rational(num, c);
}

namespace detail {

inline void require_q_at_least(const integer& q, int min) {
  if (q < min)
    fail(errc::q_out_of_range, "require q >= " + std::to_string(min));
}

inline void require_coprime_family(const curve_family& c, const char* what) {
  if (c.gcd_nd() != 1)
    fail(errc::requires_coprime_family,
         std::string("gcd(n, d) = ") + c.gcd_nd().str() + " > 1: " + what);
}

// The D-sum every q >= 2 weight formula shares: D(-(d+G)q, -d, n).
inline rational weight_d_sum(const curve_family& c, const integer& q) {
  return fractional_part_sum(-(c.d() + c.gcd_nd()) * q, -c.d(), c.n());
}

inline integer nonnegative_weight(const rational& v) {
  integer w = to_integer(v);
  if (w < 0) throw std::logic_error("negative weight " + w.str());
  return w;
}

}  // namespace detail

// W1 = sum of ni + dj over the exponent set, for q >= 2:
//   2(g-1)^2 q^2 + (g-1)Gq + (G^2 - 1 - (n-1)(d-1)(2nd-n-d-1)) / 12.
inline integer w1_closed(const curve_family& c, const integer& q) {
  detail::require_q_at_least(q, 2);
  const integer &n = c.n(), &d = c.d(), &G = c.gcd_nd(), &g = c.genus();
  return to_integer(
      2 * (g - 1) * (g - 1) * q * q + (g - 1) * G * q +
      rational(G * G - 1 - (n - 1) * (d - 1) * (2 * n * d - n - d - 1), 12));
}

// W2 = (d-1) * sum of j over the exponent set, for q >= 2:
//   (d-1) [ (n-1)((g-1)q + (-2nd+3n+d)/6) - D(-(d+G)q, -d, n) ].
inline integer w2_closed(const curve_family& c, const integer& q) {
  detail::require_q_at_least(q, 2);
  const integer &n = c.n(), &d = c.d(), &g = c.genus();
  const rational inner = (n - 1) * ((g - 1) * q + rational(-2 * n * d + 3 * n + d, 6)) -
                         detail::weight_d_sum(c, q);
  return to_integer((d - 1) * inner);
}

// W3 = 0 + 1 + ... + (d_q - 1).
inline integer w3_triangular(const curve_family& c, const integer& q) {
  const integer k = dimension(c, q);
  return k * (k - 1) / 2;
}

// q-weight of an affine branch point for q >= 2, any gcd:
//   ((n-1)(d-1)(n+1)(d-7) + 12g(G+1) + 5(G^2-1)) / 24
//     + (d-1) * D(-(d+G)q, -d, n).
// Valid for every family, including the two exceptional triples.
inline integer affine_branch_weight(const curve_family& c, const integer& q) {
  detail::require_q_at_least(q, 2);
  const integer &n = c.n(), &d = c.d(), &G = c.gcd_nd(), &g = c.genus();
  return detail::nonnegative_weight(
      rational((n - 1) * (d - 1) * (n + 1) * (d - 7) + 12 * g * (G + 1) +
                   5 * (G * G - 1),
               24) +
      (d - 1) * detail::weight_d_sum(c, q));
}

// 1-weight of an affine branch point, stated only for gcd(n, d) = 1:
//   g(n+1)(d-7)/12 + (d-1) * sum_{j=1}^{n-1} frac(-dj/n) j.
// For gcd(n, d) > 1 there is no closed form; use the enumeration oracle.
inline integer affine_branch_weight_q1(const curve_family& c) {
  detail::require_coprime_family(
      c, "no q = 1 closed form; use the enumeration oracle");
  const integer &n = c.n(), &d = c.d(), &g = c.genus();
  return detail::nonnegative_weight(
      rational(g * (n + 1) * (d - 7), 12) +
      (d - 1) * fractional_part_sum(0, -d, n));
}

// q-weight of the lone point at infinity when gcd(n, d) = 1:
//   (n^2-1)(d^2-1)/24, minus g when q = 1.
// For gcd(n, d) > 1 the value depends on the coefficients of f and is not
// a function of (n, d, q); callers get a typed error, never an estimate.
inline integer infinity_weight(const curve_family& c, const integer& q) {
  detail::require_q_at_least(q, 1);
  detail::require_coprime_family(
      c, "the point-at-infinity weight depends on the coefficients of f");
  const integer &n = c.n(), &d = c.d();
  rational v((n * n - 1) * (d * d - 1), 24);
  if (q == 1) v -= c.genus();
  return detail::nonnegative_weight(v);
}

// Special-case closed forms for the affine branch weight. Each selector
// evaluates its own formula (not the general one) and insists that its
// congruence actually holds; the caller names the formula under test.
enum class special_case {
  coprime,         // gcd(n, d) = 1
  d_cong_minus_g,  // d = -G (mod n); the weight does not depend on q
  d_cong_minus_1,  // d = -1 (mod n)
  n_divides_d,     // n | d
};

inline integer specialized_branch_weight(const curve_family& c, const integer& q,
                                         special_case which) {
  detail::require_q_at_least(q, 2);
  const integer &n = c.n(), &d = c.d(), &G = c.gcd_nd(), &g = c.genus();
  switch (which) {
    case special_case::coprime: {
      if (G != 1)
        fail(errc::hypothesis_not_satisfied,
             "gcd(n, d) = " + G.str() + ", need gcd(n, d) = 1");
      return detail::nonnegative_weight(
          rational(g * (n + 1) * (d - 7), 12) + g +
          (d - 1) * fractional_part_sum(-(d + 1) * q, -d, n));
    }
    case special_case::d_cong_minus_g: {
      if ((d + G) % n != 0)
        fail(errc::hypothesis_not_satisfied,
             "d = " + floor_mod(d, n).str() + " (mod n), need d = -gcd(n, d) (mod n)");
      const integer n_prime = n / G;
      return detail::nonnegative_weight(rational(
          (n - 1) * (d - 1) * (n + 1) * (d - 7) + 12 * g * (G + 1) +
              5 * (G * G - 1) + 2 * (d - 1) * (n - G) * (3 * n + n_prime - 2),
          24));
    }
    case special_case::d_cong_minus_1:
      if ((d + 1) % n != 0)
        fail(errc::hypothesis_not_satisfied,
             "d = " + floor_mod(d, n).str() + " (mod n), need d = -1 (mod n)");
      return detail::nonnegative_weight(rational((n * n - 1) * (d * d - 1), 24));
    case special_case::n_divides_d:
      if (d % n != 0)
        fail(errc::hypothesis_not_satisfied,
             "d = " + floor_mod(d, n).str() + " (mod n), need n | d");
      return detail::nonnegative_weight(rational((n * n - 1) * (d * d - 2 * d), 24));
  }
  throw std::logic_error("unknown special-case selector");
}

// Total q-weight over all points of the curve: g^3 - g for q = 1,
// g(g-1)^2(2q-1)^2 for q >= 2. A reference constant; the non-branch
// q-Weierstrass points themselves are not locatable from (n, d, q).
inline integer curve_total_weight(const curve_family& c, const integer& q) {
  detail::require_q_at_least(q, 1);
  const integer& g = c.genus();
  if (q == 1) return g * g * g - g;
  return g * (g - 1) * (g - 1) * (2 * q - 1) * (2 * q - 1);
}

// Limit of BW_q / (total q-weight) along coprime d -> infinity:
//   (n+1) / (3(n-1)^2) for q = 1, (n+1) / (3(n-1)^2(2q-1)^2) for q >= 2.
inline rational asymptotic_proportion_bound(const integer& n, const integer& q) {
  if (n < 2) fail(errc::exponent_out_of_range, "require n >= 2");
  detail::require_q_at_least(q, 1);
  integer den = 3 * (n - 1) * (n - 1);
  if (q >= 2) den *= (2 * q - 1) * (2 * q - 1);
  return rational(n + 1, den);
}

// The decomposition weight = W1 - W2 - W3, all parts from closed forms.
struct weight_breakdown {
  integer w1;
  integer w2;
  integer w3;
  integer weight;
};

inline weight_breakdown closed_form_breakdown(const curve_family& c,
                                              const integer& q) {
  weight_breakdown b{w1_closed(c, q), w2_closed(c, q), w3_triangular(c, q), 0};
  b.weight = b.w1 - b.w2 - b.w3;
  return b;
}

// Everything reported for one (family, q): the per-point weights, the
// branch total BW_q = d * w(B) + w(P_inf), the curve total, and the exact
// proportion. Fields tied to the point at infinity exist only when
// gcd(n, d) = 1.
struct branch_weight_report {
  curve_family family;
  integer q;
  integer affine_weight;
  std::optional<integer> infinity_weight;
  std::optional<integer> branch_total;
  integer curve_total;
  std::optional<rational> proportion;
  rational asymptotic_bound;
};

inline branch_weight_report make_branch_weight_report(const curve_family& c,
                                                      const integer& q) {
  detail::require_q_at_least(q, 1);
  if (q == 1)
    detail::require_coprime_family(
        c, "no q = 1 closed forms; use the enumeration oracle");
  branch_weight_report r{
      c,
      q,
      q == 1 ? affine_branch_weight_q1(c) : affine_branch_weight(c, q),
      std::nullopt,
      std::nullopt,
      curve_total_weight(c, q),
      std::nullopt,
      asymptotic_proportion_bound(c.n(), q)};
  if (c.gcd_nd() == 1) {
    r.infinity_weight = infinity_weight(c, q);
    r.branch_total = c.d() * r.affine_weight + *r.infinity_weight;
    r.proportion = rational(*r.branch_total, r.curve_total);
  }
  return r;
}

}  // namespace sew
