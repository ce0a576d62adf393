#include <catch2/catch_amalgamated.hpp>

#include "sew/semigroup.hpp"

using sew::gap_count;
using sew::gap_set;
using sew::gap_sum;
using sew::integer;
using sew::is_representable;
using sew::semigroup_pair;

namespace {
std::vector<integer> ints(std::initializer_list<long long> xs) {
  return {xs.begin(), xs.end()};
}
}  // namespace

TEST_CASE("representability by exact scan") {
  const semigroup_pair s23(2, 3);
  CHECK_FALSE(is_representable(s23, 1));
  CHECK(is_representable(s23, 0));
  CHECK(is_representable(s23, 2));
  const semigroup_pair s35(3, 5);
  CHECK_FALSE(is_representable(s35, 7));
  CHECK(is_representable(s35, 8));
  CHECK_FALSE(is_representable(s35, -1));
}

TEST_CASE("gap sets of small pairs") {
  CHECK(gap_set(semigroup_pair(2, 3)) == ints({1}));
  CHECK(gap_set(semigroup_pair(3, 5)) == ints({1, 2, 4, 7}));
  CHECK(gap_set(semigroup_pair(2, 7)) == ints({1, 3, 5}));
  CHECK(gap_set(semigroup_pair(1, 5)).empty());
}

TEST_CASE("non-coprime generators refuse gap queries") {
  const semigroup_pair s(4, 6);
  CHECK_FALSE(s.coprime());
  for (auto op : {+[](const semigroup_pair& p) { (void)gap_set(p); },
                  +[](const semigroup_pair& p) { (void)gap_count(p); },
                  +[](const semigroup_pair& p) { (void)gap_sum(p); },
                  +[](const semigroup_pair& p) { (void)frobenius_number(p); }}) {
    try {
      op(s);
      FAIL("expected a domain error");
    } catch (const sew::domain_error& e) {
      CHECK(e.code() == sew::errc::non_coprime_generators);
    }
  }
}

TEST_CASE("generators below 1 are rejected") {
  CHECK_THROWS_AS(semigroup_pair(0, 5), sew::domain_error);
  CHECK_THROWS_AS(semigroup_pair(3, -1), sew::domain_error);
}

TEST_CASE("closed-form count and sum") {
  CHECK(gap_count(semigroup_pair(2, 3)) == 1);
  CHECK(gap_count(semigroup_pair(3, 5)) == 4);
  CHECK(gap_count(semigroup_pair(1, 9)) == 0);
  CHECK(gap_sum(semigroup_pair(2, 3)) == 1);
  CHECK(gap_sum(semigroup_pair(3, 5)) == 14);
  CHECK(gap_sum(semigroup_pair(2, 7)) == 9);
}

TEST_CASE("frobenius number") {
  CHECK(frobenius_number(semigroup_pair(2, 3)) == 1);
  CHECK(frobenius_number(semigroup_pair(3, 5)) == 7);
  CHECK(frobenius_number(semigroup_pair(1, 5)) == -1);
}

TEST_CASE("closed forms match enumeration for all coprime pairs up to 30") {
  for (long long a = 2; a <= 30; ++a)
    for (long long b = a + 1; b <= 30; ++b) {
      const semigroup_pair s(a, b);
      if (!s.coprime()) continue;
      const auto gaps = gap_set(s);
      CHECK(integer(gaps.size()) == gap_count(s));
      integer sum = 0;
      for (const auto& g : gaps) sum += g;
      CHECK(sum == gap_sum(s));
      CHECK(gaps.back() == frobenius_number(s));
    }
}

TEST_CASE("gap set is symmetric in the generators") {
  for (long long a = 2; a <= 12; ++a)
    for (long long b = a + 1; b <= 13; ++b) {
      const semigroup_pair ab(a, b), ba(b, a);
      if (!ab.coprime()) continue;
      CHECK(gap_set(ab) == gap_set(ba));
    }
}

TEST_CASE("membership dichotomy below the frobenius number") {
  for (auto [a, b] : {std::pair<long long, long long>{3, 7}, {4, 9}, {5, 8}}) {
    const semigroup_pair s(a, b);
    const auto gaps = gap_set(s);
    integer next = 0;
    std::size_t at = 0;
    for (integer m = 0; m <= frobenius_number(s); ++m) {
      const bool in_gaps = at < gaps.size() && gaps[at] == m;
      if (in_gaps) ++at;
      CHECK(is_representable(s, m) == !in_gaps);
      (void)next;
    }
    CHECK(at == gaps.size());
  }
}
