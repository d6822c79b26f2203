#include "maxord/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxord {

SignedPartition SignedPartition::from_parts(std::vector<SignedPart> parts) {
  std::sort(parts.begin(), parts.end(), [](const SignedPart& a, const SignedPart& b) {
    return part_rank(a) > part_rank(b);
  });
  unsigned long total = 0;
  for (const SignedPart& p : parts) {
    if (p.d == 0) throw std::invalid_argument("signed partition: parts must be >= 1");
    total += p.d;
  }
  return SignedPartition{std::move(parts), total};
}

bool SignedPartition::is_canonical() const {
  unsigned long sum = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].d == 0) return false;
    if (i > 0 && part_rank(parts[i - 1]) < part_rank(parts[i])) return false;
    sum += parts[i].d;
  }
  return sum == total;
}

TwoAdicExpansion two_adic_expansion(unsigned long n) {
  if (n == 0) throw std::invalid_argument("two_adic_expansion: n must be >= 1");
  TwoAdicExpansion ex;
  ex.n = n;
  for (unsigned bit = 0; n != 0; ++bit, n >>= 1)
    if (n & 1) ex.exponents.push_back(bit);
  return ex;
}

bool partition_precedes(const SignedPartition& a, const SignedPartition& b) {
  const size_t k = std::min(a.parts.size(), b.parts.size());
  for (size_t i = 0; i < k; ++i) {
    const unsigned long ra = part_rank(a.parts[i]);
    const unsigned long rb = part_rank(b.parts[i]);
    if (ra != rb) return ra > rb;
  }
  return a.parts.size() < b.parts.size();
}

SignedPartitionStream::SignedPartitionStream(unsigned long n, Family family)
    : n_(n), family_(family), remaining_(n) {}

unsigned long SignedPartitionStream::child_cap(unsigned long parent_rank) const {
  unsigned long cap = family_ == Family::distinct ? parent_rank - 1 : parent_rank;
  return std::min(cap, 2 * remaining_);
}

void SignedPartitionStream::push(unsigned long rank) {
  const unsigned long d = (rank + 1) / 2;
  parts_.push_back(SignedPart{d, rank % 2 == 0 ? Sign::plus : Sign::minus});
  ranks_.push_back(rank);
  remaining_ -= d;
}

unsigned long SignedPartitionStream::pop_top() {
  const unsigned long rank = ranks_.back();
  remaining_ += parts_.back().d;
  ranks_.pop_back();
  parts_.pop_back();
  return rank;
}

std::optional<SignedPartition> SignedPartitionStream::next() {
  if (finished_) return std::nullopt;
  unsigned long cursor;
  if (!started_) {
    started_ = true;
    if (n_ == 0) {
      finished_ = true;
      return SignedPartition{};
    }
    cursor = 2 * n_;
  } else {
    // Resume past the partition yielded last: advance the deepest level.
    cursor = pop_top() - 1;
  }
  for (;;) {
    if (cursor == 0) {
      if (ranks_.empty()) {
        finished_ = true;
        return std::nullopt;
      }
      cursor = pop_top() - 1;
      continue;
    }
    const unsigned long d = (cursor + 1) / 2;
    if (d > remaining_) {
      --cursor;
      continue;
    }
    push(cursor);
    if (remaining_ == 0) return SignedPartition{parts_, n_};
    if (prune_ && prune_(parts_, remaining_)) {
      cursor = pop_top() - 1;
      continue;
    }
    cursor = child_cap(cursor);
  }
}

uint64_t count_signed_partitions(unsigned long n) {
  SignedPartitionStream stream(n);
  uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

}  // namespace maxord
