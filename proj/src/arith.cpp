#include "maxord/arith.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace maxord {

FieldSize FieldSize::of(unsigned long q) {
  if (q < 2 || (q & (q - 1)) != 0)
    throw std::invalid_argument("field size: q must be a power of 2 and >= 2");
  FieldSize fs;
  fs.q = q;
  fs.f = static_cast<unsigned>(std::bit_width(q)) - 1;
  return fs;
}

TwoAdicValuation two_adic_valuation(unsigned long n) {
  if (n == 0) throw std::invalid_argument("two_adic_valuation: n must be >= 1");
  const unsigned v = static_cast<unsigned>(std::countr_zero(n));
  return TwoAdicValuation{n, v, n >> v};
}

Natural q_power_pm(FieldSize q, unsigned long d, Sign sign) {
  if (d == 0) throw std::invalid_argument("q_power_pm: d must be >= 1");
  Natural r = nat_pow(q.q, d);
  r -= epsilon(sign);
  return r;
}

Natural structured_gcd(FieldSize q, unsigned long a, Sign ea, unsigned long b,
                       Sign eb) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("structured_gcd: exponents must be >= 1");
  const unsigned long g = std::gcd(a, b);
  if (ea == Sign::plus && eb == Sign::plus) return nat_pow(q.q, g) - 1;
  if (ea == Sign::minus && eb == Sign::minus) {
    if (two_adic_valuation(a).val != two_adic_valuation(b).val) return 1;
    return nat_pow(q.q, g) + 1;
  }
  // Mixed signs: x carries the +1 factor, y the -1 factor.
  const unsigned long x = (ea == Sign::minus) ? a : b;
  const unsigned long y = (ea == Sign::minus) ? b : a;
  if (two_adic_valuation(x).val >= two_adic_valuation(y).val) return 1;
  return nat_pow(q.q, g) + 1;
}

Natural lcm_signed_list(FieldSize q, std::span<const SignedPart> parts) {
  Natural acc = 1;
  for (const SignedPart& p : parts) acc = nat_lcm(acc, q_power_pm(q, p.d, p.sign));
  return acc;
}

Natural ceil_pow2_factor(unsigned long m_prime) {
  if (m_prime == 0) return 1;
  return nat_pow(2, std::bit_width(2 * m_prime - 1));
}

Natural cyclotomic_product(FieldSize q, unsigned ell) {
  if (ell == 0) throw std::invalid_argument("cyclotomic_product: ell must be >= 1");
  if (ell > 40) throw std::invalid_argument("cyclotomic_product: ell too large");
  Natural acc = 1;
  unsigned long e = 1;
  for (unsigned i = 0; i < ell; ++i, e *= 2) acc *= nat_pow(q.q, e) + 1;
  return acc;
}

}  // namespace maxord
