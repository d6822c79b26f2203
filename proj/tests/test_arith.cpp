#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "maxord/arith.hpp"

using namespace maxord;

namespace {

const FieldSize kQ2 = FieldSize::of(2);
const FieldSize kQ4 = FieldSize::of(4);
const FieldSize kQ8 = FieldSize::of(8);

// Independent oracle: gcd of the fully expanded factors.
Natural euclid_gcd(FieldSize q, unsigned long a, Sign ea, unsigned long b, Sign eb) {
  return nat_gcd(q_power_pm(q, a, ea), q_power_pm(q, b, eb));
}

}  // namespace

TEST_CASE("field size validation") {
  CHECK(FieldSize::of(2).f == 1);
  CHECK(FieldSize::of(4).f == 2);
  CHECK(FieldSize::of(32).f == 5);
  CHECK(FieldSize::of(65536).f == 16);
  CHECK_THROWS_AS(FieldSize::of(0), std::invalid_argument);
  CHECK_THROWS_AS(FieldSize::of(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSize::of(3), std::invalid_argument);
  CHECK_THROWS_AS(FieldSize::of(12), std::invalid_argument);
}

TEST_CASE("two adic valuation") {
  const auto v = two_adic_valuation(48);
  CHECK(v.val == 4);
  CHECK(v.odd_part == 3);
  CHECK(two_adic_valuation(1).val == 0);
  CHECK(two_adic_valuation(1).odd_part == 1);
  CHECK_THROWS_AS(two_adic_valuation(0), std::invalid_argument);

  for (unsigned long n = 1; n <= 4096; ++n) {
    const auto d = two_adic_valuation(n);
    CHECK(d.odd_part % 2 == 1);
    CHECK((Natural(d.odd_part) << d.val) == n);
  }
}

TEST_CASE("q_power_pm") {
  CHECK(q_power_pm(kQ2, 4, Sign::plus) == 15);
  CHECK(q_power_pm(kQ4, 2, Sign::minus) == 17);
  CHECK(q_power_pm(kQ2, 8, Sign::minus) == 257);
  CHECK_THROWS_AS(q_power_pm(kQ2, 0, Sign::plus), std::invalid_argument);
}

TEST_CASE("structured_gcd examples") {
  CHECK(structured_gcd(kQ2, 4, Sign::plus, 6, Sign::plus) == 3);
  CHECK(structured_gcd(kQ2, 1, Sign::minus, 2, Sign::minus) == 1);
  CHECK(structured_gcd(kQ4, 1, Sign::minus, 3, Sign::plus) == 1);
  CHECK_THROWS_AS(structured_gcd(kQ2, 0, Sign::plus, 1, Sign::plus),
                  std::invalid_argument);
  CHECK_THROWS_AS(structured_gcd(kQ2, 1, Sign::plus, 0, Sign::plus),
                  std::invalid_argument);
}

TEST_CASE("structured_gcd agrees with the Euclidean oracle") {
  constexpr Sign signs[2] = {Sign::plus, Sign::minus};
  for (FieldSize q : {kQ2, kQ4, kQ8})
    for (unsigned long a = 1; a <= 12; ++a)
      for (unsigned long b = 1; b <= 12; ++b)
        for (Sign ea : signs)
          for (Sign eb : signs) {
            CAPTURE(q.q);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(structured_gcd(q, a, ea, b, eb) == euclid_gcd(q, a, ea, b, eb));
          }
}

TEST_CASE("lcm_signed_list") {
  CHECK(lcm_signed_list(kQ2, {}) == 1);
  const std::vector<SignedPart> p1 = {{1, Sign::minus}, {2, Sign::minus}};
  CHECK(lcm_signed_list(kQ2, p1) == 15);
  const std::vector<SignedPart> p2 = {{1, Sign::minus}, {3, Sign::plus}};
  CHECK(lcm_signed_list(kQ4, p2) == 315);
}

TEST_CASE("lcm_signed_list divisibility envelope") {
  // Divisible by each factor and dividing the full product.
  const std::vector<std::vector<SignedPart>> cases = {
      {{3, Sign::plus}, {3, Sign::minus}, {1, Sign::minus}},
      {{5, Sign::minus}, {4, Sign::plus}, {2, Sign::minus}, {1, Sign::plus}},
      {{6, Sign::plus}, {6, Sign::plus}},
      {{8, Sign::minus}, {7, Sign::plus}, {2, Sign::plus}},
  };
  for (FieldSize q : {kQ2, kQ4})
    for (const auto& parts : cases) {
      const Natural l = lcm_signed_list(q, parts);
      Natural product = 1;
      for (const SignedPart& p : parts) {
        CHECK(l % q_power_pm(q, p.d, p.sign) == 0);
        product *= q_power_pm(q, p.d, p.sign);
      }
      CHECK(product % l == 0);
    }
}

TEST_CASE("ceil_pow2_factor") {
  CHECK(ceil_pow2_factor(0) == 1);
  CHECK(ceil_pow2_factor(3) == 8);
  CHECK(ceil_pow2_factor(5) == 16);
  for (unsigned long mp : {0ul, 1ul, 2ul, 3ul})
    CHECK(ceil_pow2_factor(mp) == nat_pow(2, mp));
  for (unsigned long mp = 1; mp <= 200; ++mp) {
    const Natural v = ceil_pow2_factor(mp);
    CHECK(v >= 2 * Natural(mp));
    CHECK(v < 4 * Natural(mp));
    CHECK(mpz_popcount(v.get_mpz_t()) == 1);
  }
}

TEST_CASE("cyclotomic_product") {
  CHECK(cyclotomic_product(kQ2, 2) == 15);
  CHECK(cyclotomic_product(kQ4, 1) == 5);
  CHECK(cyclotomic_product(kQ2, 3) == 255);
  CHECK_THROWS_AS(cyclotomic_product(kQ2, 0), std::invalid_argument);

  for (FieldSize q : {kQ2, kQ4, kQ8})
    for (unsigned ell = 1; ell <= 8; ++ell) {
      CAPTURE(q.q);
      CAPTURE(ell);
      CHECK(cyclotomic_product(q, ell) * (q.q - 1) == nat_pow(q.q, 1ul << ell) - 1);
    }
}

TEST_CASE("divisibility growth of q^a - 1 and q^a + 1") {
  for (FieldSize q : {kQ2, kQ4})
    for (unsigned long a = 1; a <= 8; ++a)
      for (unsigned long b = 1; b <= 8; ++b) {
        CAPTURE(q.q);
        CAPTURE(a);
        CAPTURE(b);
        // 2^ceil(log2 b); ceil_pow2_factor(b) is 2^ceil(log2 2b) = twice that.
        const Natural floor = ceil_pow2_factor(b) / 2;
        const Natural minus_ratio =
            exact_div(q_power_pm(q, a * b, Sign::plus), q_power_pm(q, a, Sign::plus));
        CHECK(minus_ratio >= floor);
        if (b % 2 == 1) {
          const Natural r =
              exact_div(q_power_pm(q, a * b, Sign::minus), q_power_pm(q, a, Sign::minus));
          if (q.q == 2 && a == 1 && b == 3)
            CHECK(r < floor);
          else
            CHECK(r >= floor);
        } else {
          const Natural r =
              exact_div(q_power_pm(q, a * b, Sign::plus), q_power_pm(q, a, Sign::minus));
          if (q.q == 2 && a == 1 && b == 2)
            CHECK(r < floor);
          else
            CHECK(r >= floor);
        }
      }
}
