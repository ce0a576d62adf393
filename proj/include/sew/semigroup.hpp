#pragma once

// Numerical semigroups with two generators: representability tests, gap
// enumeration, and the closed-form gap count and gap sum. Enumeration is
// deliberately naive and exact; it is the oracle the closed forms are
// tested against.

#include <utility>
#include <vector>

#include "sew/error.hpp"
#include "sew/numeric.hpp"

namespace sew {

// The semigroup <a, b> = {ax + by : x, y >= 0} for positive integers a, b.
// Gap queries require gcd(a, b) = 1; otherwise the gap set is infinite and
// the operations below refuse.
class semigroup_pair {
 public:
  semigroup_pair(integer a, integer b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ < 1 || b_ < 1)
      fail(errc::generator_out_of_range, "semigroup generators must be >= 1");
    gcd_ = boost::multiprecision::gcd(a_, b_);
  }

  const integer& a() const { return a_; }
  const integer& b() const { return b_; }
  const integer& gcd() const { return gcd_; }
  bool coprime() const { return gcd_ == 1; }

 private:
  integer a_, b_, gcd_;
};

// True iff m = ax + by for some x, y >= 0. Exact integer scan over x.
inline bool is_representable(const semigroup_pair& s, const integer& m) {
  if (m < 0) return false;
  for (integer x = 0; x * s.a() <= m; ++x)
    if ((m - x * s.a()) % s.b() == 0) return true;
  return false;
}

namespace detail {
inline void require_coprime(const semigroup_pair& s) {
  if (!s.coprime())
    fail(errc::non_coprime_generators,
         "gcd(" + s.a().str() + ", " + s.b().str() + ") = " + s.gcd().str() +
             ": the gap set is infinite");
}
}  // namespace detail

// Largest non-representable integer, ab - a - b; -1 when a or b is 1.
inline integer frobenius_number(const semigroup_pair& s) {
  detail::require_coprime(s);
  if (s.a() == 1 || s.b() == 1) return integer(-1);
  return s.a() * s.b() - s.a() - s.b();
}

// All non-representable non-negative integers, in increasing order.
inline std::vector<integer> gap_set(const semigroup_pair& s) {
  detail::require_coprime(s);
  std::vector<integer> gaps;
  const integer last = frobenius_number(s);
  for (integer m = 1; m <= last; ++m)
    if (!is_representable(s, m)) gaps.push_back(m);
  return gaps;
}

// |gaps| = (a-1)(b-1)/2.
inline integer gap_count(const semigroup_pair& s) {
  detail::require_coprime(s);
  return (s.a() - 1) * (s.b() - 1) / 2;
}

// Sum of the gaps, (a-1)(b-1)(2ab-a-b-1)/12.
inline integer gap_sum(const semigroup_pair& s) {
  detail::require_coprime(s);
  const integer &a = s.a(), &b = s.b();
  return to_integer(rational((a - 1) * (b - 1) * (2 * a * b - a - b - 1), 12));
}

}  // namespace sew
