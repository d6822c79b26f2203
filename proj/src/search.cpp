#include "maxord/search.hpp"

#include <atomic>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

namespace maxord {

const char* to_string(SearchMode mode) {
  return mode == SearchMode::exhaustive ? "exhaustive" : "pruned";
}

Natural l_value(unsigned long m, FieldSize q, unsigned long m_prime,
                const SignedPartition& p) {
  if (m_prime > m || p.total != m - m_prime)
    throw std::invalid_argument("l_value: m_prime + partition total must equal m");
  return ceil_pow2_factor(m_prime) * lcm_signed_list(q, p.parts);
}

namespace {

struct SubSearch {
  std::optional<SearchWitness> best;
  uint64_t candidates = 0;
};

// Factor and bound caches are per subsearch; mpz values are not shared
// across threads.
class FactorCache {
 public:
  explicit FactorCache(FieldSize q) : q_(q) {}

  const Natural& factor(const SignedPart& p) {
    auto [it, fresh] = cache_.try_emplace(part_rank(p));
    if (fresh) it->second = q_power_pm(q_, p.d, p.sign);
    return it->second;
  }

  // (q^(b+1) - 1)/(q - 1): no value attainable by parts summing to b
  // exceeds it.
  const Natural& budget_bound(unsigned long b) {
    auto [it, fresh] = bounds_.try_emplace(b);
    if (fresh)
      it->second = exact_div(nat_pow(q_.q, b + 1) - 1, Natural(q_.q - 1));
    return it->second;
  }

 private:
  FieldSize q_;
  std::map<unsigned long, Natural> cache_;
  std::map<unsigned long, Natural> bounds_;
};

SubSearch search_one_m_prime(unsigned long m, FieldSize q, unsigned long m_prime,
                             SearchMode mode) {
  SubSearch out;
  const Natural unipotent = ceil_pow2_factor(m_prime);
  const auto family = mode == SearchMode::distinct_pruned
                          ? SignedPartitionStream::Family::distinct
                          : SignedPartitionStream::Family::all;
  SignedPartitionStream stream(m - m_prime, family);
  FactorCache cache(q);
  if (mode == SearchMode::distinct_pruned) {
    stream.set_prune([&](const std::vector<SignedPart>& prefix, unsigned long remaining) {
      if (!out.best) return false;
      Natural optimistic = unipotent;
      for (const SignedPart& p : prefix) optimistic *= cache.factor(p);
      optimistic *= cache.budget_bound(remaining);
      return optimistic <= out.best->value;
    });
  }
  while (auto p = stream.next()) {
    Natural v = l_value(m, q, m_prime, *p);
    ++out.candidates;
    // Enumeration order is the tie-break order, so ties never replace.
    if (!out.best || v > out.best->value)
      out.best = SearchWitness{m_prime, std::move(*p), std::move(v)};
  }
  return out;
}

}  // namespace

SearchReport maximize(unsigned long m, FieldSize q, SearchMode mode, unsigned threads) {
  if (m == 0) throw std::invalid_argument("maximize: m must be >= 1");
  std::vector<unsigned long> m_primes;
  if (mode == SearchMode::distinct_pruned) {
    const unsigned long cap = q.q > 2 ? 0 : std::min<unsigned long>(3, m);
    for (unsigned long mp = 0; mp <= cap; ++mp) m_primes.push_back(mp);
  } else {
    for (unsigned long mp = 0; mp <= m; ++mp) m_primes.push_back(mp);
  }

  std::vector<SubSearch> results(m_primes.size());
  if (threads <= 1 || m_primes.size() == 1) {
    for (size_t i = 0; i < m_primes.size(); ++i)
      results[i] = search_one_m_prime(m, q, m_primes[i], mode);
  } else {
    std::atomic<size_t> next_task{0};
    auto worker = [&] {
      for (;;) {
        const size_t i = next_task.fetch_add(1);
        if (i >= m_primes.size()) return;
        results[i] = search_one_m_prime(m, q, m_primes[i], mode);
      }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<size_t>(threads, m_primes.size());
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchReport report;
  report.m = m;
  report.q = q;
  report.mode = mode;
  std::optional<SearchWitness> best;
  for (SubSearch& sub : results) {
    report.candidates_evaluated += sub.candidates;
    if (!sub.best) continue;  // only possible for an empty domain, i.e. never
    // Merge in ascending m_prime order: a tie keeps the earlier witness.
    if (!best || sub.best->value > best->value) best = std::move(sub.best);
  }
  if (!best) throw std::logic_error("maximize: empty search domain");
  report.best = std::move(*best);
  report.agrees_with_formula = report.best.value == max_order(m, q);
  return report;
}

std::vector<SearchReport> verify_theorem2(unsigned long m_max,
                                          const std::vector<FieldSize>& qs,
                                          SearchMode mode, unsigned threads) {
  if (m_max == 0) throw std::invalid_argument("verify_theorem2: m_max must be >= 1");
  std::vector<SearchReport> reports;
  reports.reserve(m_max * qs.size());
  for (const FieldSize& q : qs)
    for (unsigned long m = 1; m <= m_max; ++m)
      reports.push_back(maximize(m, q, mode, threads));
  return reports;
}

}  // namespace maxord
