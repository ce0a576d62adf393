#pragma once

// Superelliptic curve families y^n = f(x) with f separable of degree d.
// Everything here depends on (n, d, q) alone: the genus, the dimension of
// the space of holomorphic q-differentials, the exponent pairs indexing
// its monomial basis, and the orders of vanishing at the points over
// infinity. The polynomial f itself is never represented.

#include <utility>
#include <vector>

#include "sew/error.hpp"
#include "sew/numeric.hpp"

namespace sew {

// The pair (n, d) with 2 <= n < d, derived G = gcd(n, d) and genus g,
// where 2g - 2 = nd - n - d - G. Families of genus < 2 are rejected; the
// rejection is computed from the genus formula, never from a list.
class curve_family {
 public:
  curve_family(integer n, integer d) : n_(std::move(n)), d_(std::move(d)) {
    if (n_ < 2) fail(errc::exponent_out_of_range, "require n >= 2");
    if (d_ <= n_) fail(errc::degree_out_of_range, "require d > n");
    gcd_ = gcd(n_, d_);
    // nd - n - d - G is always even, so the genus is an integer.
    genus_ = (n_ * d_ - n_ - d_ - gcd_ + 2) / 2;
    if (genus_ < 2)
      fail(errc::genus_out_of_range,
           "genus below 2 (g = " + genus_.str() + " for n = " + n_.str() +
               ", d = " + d_.str() + ")");
  }

  const integer& n() const { return n_; }
  const integer& d() const { return d_; }
  const integer& gcd_nd() const { return gcd_; }
  const integer& genus() const { return genus_; }

 private:
  integer n_, d_, gcd_, genus_;
};

inline curve_family make_family(integer n, integer d) {
  return curve_family(std::move(n), std::move(d));
}

// dim of the space of holomorphic q-differentials:
// g for q = 1, (g-1)(2q-1) for q >= 2.
inline integer dimension(const curve_family& c, const integer& q) {
  if (q < 1) fail(errc::q_out_of_range, "require q >= 1");
  return q == 1 ? c.genus() : (c.genus() - 1) * (2 * q - 1);
}

// A q-differential space bundles its curve with q and the dimension d_q.
struct q_differential_space {
  q_differential_space(curve_family family, integer order)
      : curve(std::move(family)), q(std::move(order)), dim(dimension(curve, q)) {}

  curve_family curve;
  integer q;
  integer dim;
};

struct exponent_pair {
  integer i;
  integer j;
  friend bool operator==(const exponent_pair&, const exponent_pair&) = default;
};

// The exponent pairs (i, j) with i >= 0, 0 <= j < n, ni + dj <= (2g-2)q,
// ordered by (j, i). They index a basis of the holomorphic q-differentials,
// so the count always equals dimension(c, q). For q = 1 the j = n-1 row is
// empty by the inequality itself.
inline std::vector<exponent_pair> exponent_set(const curve_family& c,
                                               const integer& q) {
  if (q < 1) fail(errc::q_out_of_range, "require q >= 1");
  const integer bound = (2 * c.genus() - 2) * q;
  std::vector<exponent_pair> pairs;
  for (integer j = 0; j < c.n(); ++j)
    for (integer i = 0; c.n() * i + c.d() * j <= bound; ++i)
      pairs.push_back({i, j});
  return pairs;
}

// True iff (2g-2)q - d(n-1) < 0, i.e. iff the j = n-1 row of the exponent
// grid is empty for q >= 2. Exactly two triples qualify: (2,5,2), (2,6,2).
inline bool is_exceptional_triple(const curve_family& c, const integer& q) {
  return (2 * c.genus() - 2) * q - c.d() * (c.n() - 1) < 0;
}

// Order of vanishing at each of the G points over infinity of the basis
// element with exponents (i, j): ((2g-2)q - (ni + dj)) / G, an exact
// non-negative integer for every pair in the exponent set.
inline integer infinity_vanishing_order(const curve_family& c, const integer& q,
                                        const integer& i, const integer& j) {
  if (q < 1) fail(errc::q_out_of_range, "require q >= 1");
  const integer bound = (2 * c.genus() - 2) * q;
  const integer affine_degree = c.n() * i + c.d() * j;
  if (i < 0 || j < 0 || j >= c.n() || affine_degree > bound)
    fail(errc::outside_basis, "(" + i.str() + ", " + j.str() +
                                  ") is not an exponent pair of the basis");
  return to_integer(rational(bound - affine_degree, c.gcd_nd()));
}

}  // namespace sew
