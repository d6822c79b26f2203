#include "maxord/formula.hpp"

#include <bit>
#include <stdexcept>

#include "maxord/partition.hpp"

namespace maxord {

const char* to_string(FormulaTag tag) {
  switch (tag) {
    case FormulaTag::OddQBig: return "OddQBig";
    case FormulaTag::M2QBig: return "M2QBig";
    case FormulaTag::EvenQBig: return "EvenQBig";
    case FormulaTag::Q2_M0LE3: return "Q2_M0LE3";
    case FormulaTag::Q2_OddSmall: return "Q2_OddSmall";
    case FormulaTag::Q2_EvenSmall: return "Q2_EvenSmall";
    case FormulaTag::Q2_Boundary: return "Q2_Boundary";
    case FormulaTag::Q2_OddLarge: return "Q2_OddLarge";
    case FormulaTag::Q2_EvenLarge: return "Q2_EvenLarge";
  }
  return "?";
}

FormulaCase classify(unsigned long m, FieldSize q) {
  if (m == 0) throw std::invalid_argument("classify: m must be >= 1");
  if (q.q > 2) {
    if (m % 2 == 1) {
      const auto ex = two_adic_expansion(m);
      return {FormulaTag::OddQBig, static_cast<unsigned>(ex.exponents.size()), 0};
    }
    if (m == 2) return {FormulaTag::M2QBig, 0, 0};
    // Largest ell with 2^ell + 2^(ell-1) <= m; exists since m >= 4.
    unsigned ell = 1;
    while ((3ul << ell) <= m) ++ell;
    return {FormulaTag::EvenQBig, ell, 0};
  }
  // q = 2: largest ell with 2^ell - 1 <= m, then m0 = m - (2^ell - 1).
  const unsigned ell = static_cast<unsigned>(std::bit_width(m + 1)) - 1;
  const unsigned long m0 = m - ((1ul << ell) - 1);
  if (m0 <= 3) return {FormulaTag::Q2_M0LE3, ell, m0};
  const unsigned long half = 1ul << (ell - 1);
  if (3 < m0 && m0 < half)
    return {m0 % 2 == 1 ? FormulaTag::Q2_OddSmall : FormulaTag::Q2_EvenSmall, ell, m0};
  if (3 < m0 && m0 == half) return {FormulaTag::Q2_Boundary, ell, m0};
  return {m0 % 2 == 1 ? FormulaTag::Q2_OddLarge : FormulaTag::Q2_EvenLarge, ell, m0};
}

Natural max_order(unsigned long m, FieldSize q) {
  const FormulaCase fc = classify(m, q);
  const unsigned long Q = q.q;
  switch (fc.tag) {
    case FormulaTag::OddQBig: {
      Natural acc = 1;
      for (unsigned x : two_adic_expansion(m).exponents)
        acc *= nat_pow(Q, 1ul << x) + 1;
      return acc;
    }
    case FormulaTag::M2QBig:
      return nat_pow(Q, 2) + 1;
    case FormulaTag::EvenQBig: {
      const Natural num =
          (nat_pow(Q, m - (1ul << fc.ell) + 1) - 1) * (nat_pow(Q, 1ul << fc.ell) - 1);
      return exact_div(num, Natural(Q - 1));
    }
    case FormulaTag::Q2_M0LE3:
      return nat_pow(Q, fc.m0) * (nat_pow(Q, 1ul << fc.ell) - 1);
    case FormulaTag::Q2_OddSmall:
      return (nat_pow(Q, (1ul << (fc.ell - 1)) + fc.m0) - 1) *
             (nat_pow(Q, 1ul << (fc.ell - 1)) - 1);
    case FormulaTag::Q2_EvenSmall:
      return Q * (nat_pow(Q, (1ul << (fc.ell - 1)) + fc.m0 - 1) - 1) *
             (nat_pow(Q, 1ul << (fc.ell - 1)) - 1);
    case FormulaTag::Q2_Boundary:
      return (nat_pow(Q, 1ul << fc.ell) + 1) * (nat_pow(Q, 1ul << (fc.ell - 1)) - 1);
    case FormulaTag::Q2_OddLarge:
      return (nat_pow(Q, fc.m0) - 1) * (nat_pow(Q, 1ul << fc.ell) - 1);
    case FormulaTag::Q2_EvenLarge:
      return Q * (nat_pow(Q, fc.m0 - 1) - 1) * (nat_pow(Q, 1ul << fc.ell) - 1);
  }
  throw std::logic_error("classify returned an unknown tag");
}

Natural aut_max_order(unsigned long m, FieldSize q) {
  if (m == 1 && q.q == 4) return 6;
  if (m == 2 && q.q == 2) return 10;
  if (m == 2 && q.q == 4) return 20;
  return max_order(m, q);
}

OrderBounds bounds(unsigned long m, FieldSize q) {
  if (m == 0) throw std::invalid_argument("bounds: m must be >= 1");
  OrderBounds b;
  b.lower = nat_pow(q.q, m);
  b.upper = exact_div(nat_pow(q.q, m + 1) - 1, Natural(q.q - 1));
  if (m != 2 || q.q == 2) {
    // Floor of q^(m+2) / (q^2 - 1); both operands positive.
    b.strong_lower = nat_pow(q.q, m + 2) / (Natural(q.q) * q.q - 1);
  }
  return b;
}

Natural table_reference(unsigned long m, FieldSize q) {
  if (m < 1 || m > 20)
    throw std::invalid_argument("table_reference: m must be in [1, 20]");
  const unsigned long Q = q.q;
  const auto P = [Q](unsigned long e) { return nat_pow(Q, e); };
  const auto over_q1 = [Q](const Natural& n) { return exact_div(n, Natural(Q - 1)); };
  if (Q == 2) {
    switch (m) {
      case 1: return P(2) - 1;
      case 2: return Q * (P(2) - 1);
      case 3: return P(4) - 1;
      case 4: return Q * (P(4) - 1);
      case 5: return P(2) * (P(4) - 1);
      case 6: return P(3) * (P(4) - 1);
      case 7: return P(8) - 1;
      case 8: return Q * (P(8) - 1);
      case 9: return P(2) * (P(8) - 1);
      case 10: return P(3) * (P(8) - 1);
      case 11: return (P(8) + 1) * (P(4) - 1);
      case 12: return (P(5) - 1) * (P(8) - 1);
      case 13: return Q * (P(5) - 1) * (P(8) - 1);
      case 14: return (P(7) - 1) * (P(8) - 1);
      case 15: return P(16) - 1;
      case 16: return Q * (P(16) - 1);
      case 17: return P(2) * (P(16) - 1);
      case 18: return P(3) * (P(16) - 1);
      case 19: return Q * (P(11) - 1) * (P(8) - 1);
      case 20: return (P(13) - 1) * (P(8) - 1);
    }
  } else {
    switch (m) {
      case 1: return over_q1(P(2) - 1);
      case 2: return P(2) + 1;
      case 3: return over_q1(P(4) - 1);
      case 4: return over_q1((P(3) - 1) * (P(2) - 1));
      case 5: return (P(1) + 1) * (P(4) + 1);
      case 6: return over_q1((P(3) - 1) * (P(4) - 1));
      case 7: return over_q1(P(8) - 1);
      case 8: return over_q1((P(5) - 1) * (P(4) - 1));
      case 9: return (P(1) + 1) * (P(8) + 1);
      case 10: return over_q1((P(7) - 1) * (P(4) - 1));
      case 11: return (P(1) + 1) * (P(2) + 1) * (P(8) + 1);
      case 12: return over_q1((P(5) - 1) * (P(8) - 1));
      case 13: return (P(1) + 1) * (P(4) + 1) * (P(8) + 1);
      case 14: return over_q1((P(7) - 1) * (P(8) - 1));
      case 15: return over_q1(P(16) - 1);
      case 16: return over_q1((P(9) - 1) * (P(8) - 1));
      case 17: return (P(1) + 1) * (P(16) + 1);
      case 18: return over_q1((P(11) - 1) * (P(8) - 1));
      case 19: return (P(1) + 1) * (P(2) + 1) * (P(16) + 1);
      case 20: return over_q1((P(13) - 1) * (P(8) - 1));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace maxord
