#pragma once

#include <span>
#include <vector>

#include "maxord/natural.hpp"

namespace maxord {

// Field size q = 2^f. Only even q is meaningful in this library.
struct FieldSize {
  unsigned long q = 2;
  unsigned f = 1;

  // Validates q >= 2 and q a power of 2, and derives f.
  static FieldSize of(unsigned long q);

  friend bool operator==(const FieldSize&, const FieldSize&) = default;
};

// Sign attached to a partition part d: a plus part contributes the factor
// q^d - 1, a minus part contributes q^d + 1.
enum class Sign : int { plus = +1, minus = -1 };

inline int epsilon(Sign s) { return static_cast<int>(s); }

struct SignedPart {
  unsigned long d = 0;
  Sign sign = Sign::plus;

  friend bool operator==(const SignedPart&, const SignedPart&) = default;
};

// n = 2^val * odd_part with odd_part odd; n >= 1.
struct TwoAdicValuation {
  unsigned long n = 0;
  unsigned val = 0;
  unsigned long odd_part = 0;
};

TwoAdicValuation two_adic_valuation(unsigned long n);

// q^d - 1 for a plus sign, q^d + 1 for a minus sign; d >= 1.
Natural q_power_pm(FieldSize q, unsigned long d, Sign sign);

// gcd(q^a - ea, q^b - eb) via the closed forms:
//   (+,+)  q^gcd(a,b) - 1
//   (-,+)  1 if val2(a) >= val2(b), else q^gcd(a,b) + 1   (and symmetrically)
//   (-,-)  1 if val2(a) != val2(b), else q^gcd(a,b) + 1
// Deliberately not Euclid's algorithm; tests compare against it.
Natural structured_gcd(FieldSize q, unsigned long a, Sign ea, unsigned long b,
                       Sign eb);

// lcm of the factors q^{d_i} -/+ 1 over the parts; 1 for the empty list.
Natural lcm_signed_list(FieldSize q, std::span<const SignedPart> parts);

// 1 when m_prime = 0, otherwise the smallest power of 2 that is >= 2*m_prime.
// Equals 2^m_prime for m_prime in {0, 1, 2, 3}.
Natural ceil_pow2_factor(unsigned long m_prime);

// prod_{i=0}^{ell-1} (q^{2^i} + 1), which equals (q^{2^ell} - 1) / (q - 1).
Natural cyclotomic_product(FieldSize q, unsigned ell);

}  // namespace maxord
