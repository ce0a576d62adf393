#pragma once

#include <stdexcept>
#include <string>

namespace sew {

// Reason codes for precondition failures across the library.
enum class errc {
  generator_out_of_range,    // semigroup generator < 1
  non_coprime_generators,    // gcd(a, b) > 1: the gap set is infinite
  exponent_out_of_range,     // n < 2
  degree_out_of_range,       // d <= n, or an empty degree range
  genus_out_of_range,        // derived genus < 2
  q_out_of_range,            // q below the operation's minimum
  modulus_out_of_range,      // fractional-part sum with c < 1
  requires_coprime_family,   // gcd(n, d) > 1 where 1 is required
  hypothesis_not_satisfied,  // special-case congruence fails for (n, d)
  outside_basis,             // (i, j) is not an exponent pair of the basis
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::generator_out_of_range: return "generator_out_of_range";
    case errc::non_coprime_generators: return "non_coprime_generators";
    case errc::exponent_out_of_range: return "exponent_out_of_range";
    case errc::degree_out_of_range: return "degree_out_of_range";
    case errc::genus_out_of_range: return "genus_out_of_range";
    case errc::q_out_of_range: return "q_out_of_range";
    case errc::modulus_out_of_range: return "modulus_out_of_range";
    case errc::requires_coprime_family: return "requires_coprime_family";
    case errc::hypothesis_not_satisfied: return "hypothesis_not_satisfied";
    case errc::outside_basis: return "outside_basis";
  }
  return "unknown";
}

// Thrown whenever an operation's preconditions fail; code() tells which.
class domain_error : public std::domain_error {
 public:
  domain_error(errc code, const std::string& what)
      : std::domain_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw domain_error(code, what);
}

}  // namespace sew
