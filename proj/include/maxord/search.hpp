#pragma once

#include <cstdint>
#include <vector>

#include "maxord/formula.hpp"
#include "maxord/partition.hpp"

namespace maxord {

enum class SearchMode { exhaustive, distinct_pruned };

const char* to_string(SearchMode mode);

// A maximizing (m_prime, partition) pair with its attained value.
struct SearchWitness {
  unsigned long m_prime = 0;
  SignedPartition partition;
  Natural value;
};

struct SearchReport {
  unsigned long m = 0;
  FieldSize q;
  SearchMode mode = SearchMode::exhaustive;
  SearchWitness best;
  uint64_t candidates_evaluated = 0;
  bool agrees_with_formula = false;
};

// 2-power unipotent factor for m_prime times the lcm of the signed-part
// factors. Accepts non-canonical partitions; requires
// m_prime + p.total == m.
Natural l_value(unsigned long m, FieldSize q, unsigned long m_prime,
                const SignedPartition& p);

// Maximum of l_value over the search domain. Exhaustive mode scans every
// signed partition of m - m_prime for every m_prime in [0, m]. Pruned mode
// scans only pairwise-distinct signed parts, restricts m_prime to 0 for
// q > 2 and to [0, 3] for q = 2, and may cut subtrees whose optimistic
// completion cannot beat the incumbent.
//
// Witness ties break toward the smallest m_prime, then the partition
// enumerated first. With threads > 1 the per-m_prime subsearches run in
// parallel; the merge applies the same tie-break, so the witness does not
// depend on the thread count.
SearchReport maximize(unsigned long m, FieldSize q, SearchMode mode,
                      unsigned threads = 1);

// One report per (m, q) for m in [1, m_max]; agreement of every report with
// the closed formula is this library's central check.
std::vector<SearchReport> verify_theorem2(unsigned long m_max,
                                          const std::vector<FieldSize>& qs,
                                          SearchMode mode, unsigned threads = 1);

}  // namespace maxord
