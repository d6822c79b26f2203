#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "maxord/output.hpp"

namespace maxord {

// The six machine-checkable claims behind the closed formula:
//   theorem2     search maximum == closed formula
//   bounds       q^m < M <= (q^(m+1)-1)/(q-1), sharp iff m+1 is a 2-power
//   gcd          structured_gcd == Euclidean gcd of the expanded factors
//   babylonians  prod (q^d_i + 1) <= the same product over the 2-adic
//                expansion of sum d_i, for tuples with pairwise-distinct
//                2-adic valuations
//   cyclotomic   prod (q^(2^i) + 1) * (q-1) == q^(2^ell) - 1
//   table        hard-coded reference table == closed formula
enum class VerifySuite { theorem2, bounds, gcd, babylonians, cyclotomic, table };

std::optional<VerifySuite> parse_suite(const std::string& name);
const char* to_string(VerifySuite suite);

struct VerifyOptions {
  unsigned long m_max = 8;
  std::vector<FieldSize> qs;
  SearchMode mode = SearchMode::exhaustive;
  unsigned threads = 1;
  uint64_t seed = 0;       // babylonians tuple generation
  uint64_t tuples = 1000;  // babylonians tuple count
};

// Random tuple with pairwise-distinct 2-adic valuations and bounded sum.
// Draws, per attempt: the length as 1 + next() % 5, a Fisher-Yates shuffle
// of the valuations {0..4}, then an odd multiplier 1 + 2*(next() % 4) per
// part; the attempt is redrawn whole while the sum exceeds sum_cap.
std::vector<unsigned long> babylonian_tuple(SplitMix64& rng, unsigned long sum_cap);

// Runs every check of the suite, emitting one record per check, and stops
// at the first failure (whose record is emitted too). True iff all passed.
bool run_verify_suite(VerifySuite suite, const VerifyOptions& options,
                      const std::function<void(const Json&)>& emit);

}  // namespace maxord
