#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace maxord {

// Arbitrary-precision non-negative integer. Every order, lcm and bound in
// this library is exact; the largest values reached are around q^(m+1).
using Natural = mpz_class;

inline Natural nat_pow(unsigned long base, unsigned long exp) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline Natural nat_gcd(const Natural& a, const Natural& b) {
  Natural r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Natural nat_lcm(const Natural& a, const Natural& b) {
  Natural r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Quotient a/b where b | a is required; a nonzero remainder is a logic
// error, never silent truncation.
inline Natural exact_div(const Natural& a, const Natural& b) {
  Natural q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

inline std::string to_decimal(const Natural& n) { return n.get_str(); }

}  // namespace maxord
