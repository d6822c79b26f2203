#pragma once

#include <optional>

#include "maxord/arith.hpp"

namespace maxord {

// Case of the closed-form maximum order. The first three cover q > 2
// (odd m, m = 2, even m >= 4); the six Q2_* tags cover q = 2 in the order
// the case split is written.
enum class FormulaTag {
  OddQBig,
  M2QBig,
  EvenQBig,
  Q2_M0LE3,
  Q2_OddSmall,
  Q2_EvenSmall,
  Q2_Boundary,
  Q2_OddLarge,
  Q2_EvenLarge,
};

const char* to_string(FormulaTag tag);

struct FormulaCase {
  FormulaTag tag;
  // For q = 2: the largest ell with 2^ell - 1 <= m. For EvenQBig: the largest
  // ell with 2^ell + 2^(ell-1) <= m. For OddQBig: the number of summands in
  // the 2-adic expansion of m. Unused (0) for M2QBig.
  unsigned ell = 0;
  // m - (2^ell - 1); meaningful for the q = 2 cases only.
  unsigned long m0 = 0;

  friend bool operator==(const FormulaCase&, const FormulaCase&) = default;
};

// Unique case for (m, q); m >= 1.
FormulaCase classify(unsigned long m, FieldSize q);

// The maximum element order of the 2m-dimensional symplectic group over the
// q-element field, q even, by the closed formula.
Natural max_order(unsigned long m, FieldSize q);

// Maximum element order of the full automorphism group: 6, 10, 20 for
// (m, q) = (1, 4), (2, 2), (2, 4); max_order(m, q) otherwise.
Natural aut_max_order(unsigned long m, FieldSize q);

// q^m < max_order(m, q) <= (q^(m+1) - 1)/(q - 1); the upper bound is attained
// exactly when m + 1 is a power of 2. strong_lower = floor(q^(m+2)/(q^2 - 1))
// is present unless m = 2 with q > 2.
struct OrderBounds {
  Natural lower;
  Natural upper;
  std::optional<Natural> strong_lower;
};

OrderBounds bounds(unsigned long m, FieldSize q);

// The reference table of the first twenty orders, transcribed row by row as
// literal polynomial expressions in q. Shares no case logic with max_order;
// agreement between the two is a test target, 1 <= m <= 20.
Natural table_reference(unsigned long m, FieldSize q);

}  // namespace maxord
