#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "maxord/arith.hpp"

namespace maxord {

// Multiset of signed parts in canonical order: parts sorted by descending d,
// and at equal d the plus part before the minus part. The empty partition is
// the unique partition of 0.
struct SignedPartition {
  std::vector<SignedPart> parts;
  unsigned long total = 0;

  // Canonicalizes an arbitrary part list.
  static SignedPartition from_parts(std::vector<SignedPart> parts);

  bool is_canonical() const;

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

// Strictly increasing exponents with n = sum of 2^x over them; n >= 1.
struct TwoAdicExpansion {
  unsigned long n = 0;
  std::vector<unsigned> exponents;
};

TwoAdicExpansion two_adic_expansion(unsigned long n);

// Total order on parts used for canonical form and enumeration:
// (d, +) ranks above (d, -), which ranks above (d-1, +).
inline unsigned long part_rank(const SignedPart& p) {
  return 2 * p.d - (p.sign == Sign::minus ? 1 : 0);
}

// True when a is yielded before b in the enumeration order below
// (higher leading rank first). Comparable only for canonical inputs.
bool partition_precedes(const SignedPartition& a, const SignedPartition& b);

// Lazy enumeration of the signed partitions of n, each exactly once, in a
// fixed order: (n+) first, then (n-), then partitions led by smaller parts.
// Family::distinct restricts to pairwise-distinct (d, sign) pairs; the same
// d may still occur once with each sign.
class SignedPartitionStream {
 public:
  enum class Family { all, distinct };

  // Consulted on every partial prefix with budget still to place; returning
  // true skips the prefix's whole subtree. Never called on complete
  // partitions, so enumeration without a callback is exhaustive.
  using PruneFn =
      std::function<bool(const std::vector<SignedPart>& prefix, unsigned long remaining)>;

  explicit SignedPartitionStream(unsigned long n, Family family = Family::all);

  void set_prune(PruneFn fn) { prune_ = std::move(fn); }

  // Next partition, or nullopt once the stream is exhausted.
  std::optional<SignedPartition> next();

 private:
  unsigned long child_cap(unsigned long parent_rank) const;
  unsigned long pop_top();
  void push(unsigned long rank);

  unsigned long n_;
  Family family_;
  PruneFn prune_;
  std::vector<SignedPart> parts_;
  std::vector<unsigned long> ranks_;
  unsigned long remaining_;
  bool started_ = false;
  bool finished_ = false;
};

// Number of signed partitions of n (the two-colored partition number).
uint64_t count_signed_partitions(unsigned long n);

}  // namespace maxord
