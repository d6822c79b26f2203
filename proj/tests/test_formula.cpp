#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "maxord/formula.hpp"
#include "maxord/groupcheck.hpp"

using namespace maxord;

namespace {

const FieldSize kQ2 = FieldSize::of(2);
const FieldSize kQ4 = FieldSize::of(4);

const std::vector<FieldSize> kAllQ = {FieldSize::of(2), FieldSize::of(4),
                                      FieldSize::of(8), FieldSize::of(16),
                                      FieldSize::of(32)};

}  // namespace

TEST_CASE("classify") {
  const FormulaCase c1 = classify(11, kQ2);
  CHECK(c1.tag == FormulaTag::Q2_Boundary);
  CHECK(c1.ell == 3);
  CHECK(c1.m0 == 4);

  CHECK(classify(2, kQ4).tag == FormulaTag::M2QBig);

  const FormulaCase c3 = classify(6, kQ4);
  CHECK(c3.tag == FormulaTag::EvenQBig);
  CHECK(c3.ell == 2);

  CHECK(classify(1, kQ2).tag == FormulaTag::Q2_M0LE3);
  CHECK(classify(19, kQ2).tag == FormulaTag::Q2_EvenSmall);
  CHECK(classify(12, kQ2).tag == FormulaTag::Q2_OddLarge);
  CHECK(classify(13, kQ2).tag == FormulaTag::Q2_EvenLarge);
  CHECK(classify(20, kQ2).tag == FormulaTag::Q2_OddSmall);
  CHECK(classify(7, kQ4).tag == FormulaTag::OddQBig);
  CHECK(classify(7, kQ4).ell == 3);

  CHECK_THROWS_AS(classify(0, kQ2), std::invalid_argument);
}

TEST_CASE("classify is consistent with its own case data") {
  for (FieldSize q : kAllQ)
    for (unsigned long m = 1; m <= 64; ++m) {
      const FormulaCase fc = classify(m, q);
      if (q.q == 2) {
        CHECK((1ul << fc.ell) - 1 <= m);
        CHECK((2ul << fc.ell) - 1 > m);
        CHECK(fc.m0 == m - ((1ul << fc.ell) - 1));
      } else if (fc.tag == FormulaTag::EvenQBig) {
        CHECK((1ul << fc.ell) + (1ul << (fc.ell - 1)) <= m);
        CHECK((2ul << fc.ell) + (1ul << fc.ell) > m);
      }
    }
}

TEST_CASE("max_order examples") {
  CHECK(max_order(1, kQ2) == 3);
  CHECK(max_order(5, kQ4) == 1285);
  CHECK(max_order(11, kQ2) == 3855);
  CHECK(max_order(19, kQ2) == 1043970);  // 2 * (2^11 - 1) * (2^8 - 1)
  CHECK(max_order(8, kQ2) == 510);
  CHECK(max_order(12, kQ2) == 7905);
  CHECK(max_order(2, kQ4) == 17);
  CHECK(max_order(4, kQ4) == 315);
  CHECK(max_order(3, FieldSize::of(8)) == 585);
  CHECK_THROWS_AS(max_order(0, kQ2), std::invalid_argument);
}

TEST_CASE("aut_max_order") {
  CHECK(aut_max_order(1, kQ4) == 6);
  CHECK(aut_max_order(2, kQ2) == 10);
  CHECK(aut_max_order(2, kQ4) == 20);
  CHECK(aut_max_order(3, kQ2) == 15);
  CHECK(aut_max_order(1, kQ2) == max_order(1, kQ2));

  // Everywhere else the two coincide.
  SplitMix64 rng(2024);
  int checked = 0;
  while (checked < 200) {
    const unsigned long m = 1 + rng.next() % 64;
    const FieldSize q = kAllQ[rng.next() % kAllQ.size()];
    const bool exceptional =
        (m == 1 && q.q == 4) || (m == 2 && q.q == 2) || (m == 2 && q.q == 4);
    if (exceptional) continue;
    CHECK(aut_max_order(m, q) == max_order(m, q));
    ++checked;
  }
}

TEST_CASE("bounds examples") {
  const OrderBounds b1 = bounds(3, kQ2);
  CHECK(b1.lower == 8);
  CHECK(b1.upper == 15);

  const OrderBounds b2 = bounds(1, kQ4);
  CHECK(b2.lower == 4);
  CHECK(b2.upper == 5);

  CHECK_FALSE(bounds(2, kQ4).strong_lower.has_value());
  CHECK(bounds(2, kQ2).strong_lower.has_value());
  CHECK(*bounds(2, kQ2).strong_lower == 5);  // floor(2^4 / 3)
}

TEST_CASE("bounds bracket the formula, sharp exactly at 2-power m+1") {
  for (FieldSize q : kAllQ)
    for (unsigned long m = 1; m <= 64; ++m) {
      CAPTURE(q.q);
      CAPTURE(m);
      const Natural value = max_order(m, q);
      const OrderBounds b = bounds(m, q);
      CHECK(b.lower < value);
      CHECK(value <= b.upper);
      CHECK((value == b.upper) == std::has_single_bit(m + 1));
      if (b.strong_lower) CHECK(*b.strong_lower < value);
    }
}

TEST_CASE("table_reference examples") {
  CHECK(table_reference(13, kQ2) == 15810);
  CHECK(table_reference(7, kQ4) == 21845);
  CHECK(table_reference(20, kQ2) == 2088705);
  CHECK_THROWS_AS(table_reference(0, kQ2), std::invalid_argument);
  CHECK_THROWS_AS(table_reference(21, kQ2), std::invalid_argument);
}

TEST_CASE("table_reference and max_order agree on all hundred entries") {
  for (FieldSize q : kAllQ)
    for (unsigned long m = 1; m <= 20; ++m) {
      CAPTURE(q.q);
      CAPTURE(m);
      CHECK(table_reference(m, q) == max_order(m, q));
    }
}

TEST_CASE("odd m, q > 2: the order is a 0/1-coefficient monic polynomial") {
  // Base-q digits of the value at q = 2^16 read off the coefficients.
  const FieldSize q = FieldSize::of(65536);
  for (unsigned long m = 1; m <= 63; m += 2) {
    CAPTURE(m);
    Natural v = max_order(m, q);
    unsigned long degree = 0;
    bool coeffs_ok = true;
    Natural digit, rest = v;
    for (unsigned long e = 0; rest != 0; ++e) {
      digit = rest % q.q;
      rest /= q.q;
      if (digit != 0 && digit != 1) coeffs_ok = false;
      if (digit != 0) degree = e;
    }
    CHECK(coeffs_ok);
    CHECK(degree == m);
    CHECK(v % q.q == 1);  // constant coefficient 1
  }
}

TEST_CASE("exact division by q - 1 in the product cases") {
  for (FieldSize q : {FieldSize::of(4), FieldSize::of(8), FieldSize::of(32)})
    for (unsigned long m = 4; m <= 64; m += 2) {
      const FormulaCase fc = classify(m, q);
      REQUIRE(fc.tag == FormulaTag::EvenQBig);
      const Natural num = (nat_pow(q.q, m - (1ul << fc.ell) + 1) - 1) *
                          (nat_pow(q.q, 1ul << fc.ell) - 1);
      CHECK(num % (q.q - 1) == 0);
    }
}
