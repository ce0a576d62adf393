#pragma once

// Brute-force recomputation of every weight by direct enumeration over the
// exponent set. This module shares only the set definition with the closed
// forms in weights.hpp; equality of the two routes is the central check of
// the test suite.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "sew/curve.hpp"
#include "sew/error.hpp"
#include "sew/numeric.hpp"

namespace sew::oracle {

namespace detail {

inline integer triangular(const integer& k) { return k * (k - 1) / 2; }

inline void require_distinct(std::vector<integer> orders, const char* where) {
  std::sort(orders.begin(), orders.end());
  if (std::adjacent_find(orders.begin(), orders.end()) != orders.end())
    throw std::logic_error(std::string("vanishing orders collide at ") + where);
}

inline void require_q_at_least(const integer& q, int min) {
  if (q < min)
    fail(errc::q_out_of_range, "require q >= " + std::to_string(min));
}

}  // namespace detail

// Affine branch weight from first principles: the orders of vanishing at
// an affine branch point are ni + j, pairwise distinct, so the weight is
// their sum minus 0 + 1 + ... + (d_q - 1).
inline integer affine_weight(const curve_family& c, const integer& q) {
  const auto pairs = exponent_set(c, q);
  std::vector<integer> orders;
  orders.reserve(pairs.size());
  for (const auto& p : pairs) orders.push_back(c.n() * p.i + p.j);
  detail::require_distinct(orders, "an affine branch point");
  integer sum = 0;
  for (const auto& o : orders) sum += o;
  return sum - detail::triangular(integer(orders.size()));
}

// W1 by enumeration: sum of ni + dj over the exponent set.
inline integer w1(const curve_family& c, const integer& q) {
  detail::require_q_at_least(q, 2);
  integer sum = 0;
  for (const auto& p : exponent_set(c, q)) sum += c.n() * p.i + c.d() * p.j;
  return sum;
}

// W2 by enumeration: (d - 1) times the sum of j over the exponent set.
inline integer w2(const curve_family& c, const integer& q) {
  detail::require_q_at_least(q, 2);
  integer sum = 0;
  for (const auto& p : exponent_set(c, q)) sum += p.j;
  return (c.d() - 1) * sum;
}

// Point-at-infinity weight by enumerating the vanishing orders there.
// Defined only for gcd(n, d) = 1: with G > 1 the orders collide across the
// G points and the weight depends on the coefficients of f.
inline integer infinity_weight(const curve_family& c, const integer& q) {
  if (c.gcd_nd() != 1)
    fail(errc::requires_coprime_family,
         "gcd(n, d) = " + c.gcd_nd().str() +
             " > 1: the point-at-infinity weight depends on the coefficients of f");
  const auto pairs = exponent_set(c, q);
  std::vector<integer> orders;
  orders.reserve(pairs.size());
  for (const auto& p : pairs)
    orders.push_back(infinity_vanishing_order(c, q, p.i, p.j));
  detail::require_distinct(orders, "the point at infinity");
  integer sum = 0;
  for (const auto& o : orders) sum += o;
  return sum - detail::triangular(integer(orders.size()));
}

// All enumerated quantities for one (family, q).
struct report {
  integer w1;
  integer w2;
  integer w3;
  integer affine_weight;
  std::optional<integer> infinity_weight;
  integer set_size;  // == dimension(c, q)
};

inline report make_report(const curve_family& c, const integer& q) {
  const auto pairs = exponent_set(c, q);
  integer sum_ndj = 0, sum_j = 0;
  for (const auto& p : pairs) {
    sum_ndj += c.n() * p.i + c.d() * p.j;
    sum_j += p.j;
  }
  report r{sum_ndj,
           (c.d() - 1) * sum_j,
           detail::triangular(integer(pairs.size())),
           affine_weight(c, q),
           std::nullopt,
           integer(pairs.size())};
  if (c.gcd_nd() == 1) r.infinity_weight = infinity_weight(c, q);
  return r;
}

}  // namespace sew::oracle
