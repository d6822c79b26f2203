#include "maxord/verify.hpp"

#include <algorithm>
#include <bit>

namespace maxord {

std::optional<VerifySuite> parse_suite(const std::string& name) {
  if (name == "theorem2") return VerifySuite::theorem2;
  if (name == "bounds") return VerifySuite::bounds;
  if (name == "gcd") return VerifySuite::gcd;
  if (name == "babylonians") return VerifySuite::babylonians;
  if (name == "cyclotomic") return VerifySuite::cyclotomic;
  if (name == "table") return VerifySuite::table;
  return std::nullopt;
}

const char* to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::theorem2: return "theorem2";
    case VerifySuite::bounds: return "bounds";
    case VerifySuite::gcd: return "gcd";
    case VerifySuite::babylonians: return "babylonians";
    case VerifySuite::cyclotomic: return "cyclotomic";
    case VerifySuite::table: return "table";
  }
  return "?";
}

std::vector<unsigned long> babylonian_tuple(SplitMix64& rng, unsigned long sum_cap) {
  for (;;) {
    const unsigned ell = 1 + static_cast<unsigned>(rng.next() % 5);
    unsigned vals[5] = {0, 1, 2, 3, 4};
    for (unsigned i = 4; i > 0; --i)
      std::swap(vals[i], vals[rng.next() % (i + 1)]);
    std::vector<unsigned long> tuple(ell);
    unsigned long sum = 0;
    for (unsigned i = 0; i < ell; ++i) {
      const unsigned long odd = 1 + 2 * (rng.next() % 4);
      tuple[i] = (1ul << vals[i]) * odd;
      sum += tuple[i];
    }
    if (sum <= sum_cap) return tuple;
  }
}

namespace {

bool emit_check(const std::function<void(const Json&)>& emit, Json rec, bool pass) {
  rec["pass"] = pass;
  emit(rec);
  return pass;
}

bool verify_theorem2_suite(const VerifyOptions& o,
                           const std::function<void(const Json&)>& emit) {
  for (const FieldSize& q : o.qs)
    for (unsigned long m = 1; m <= o.m_max; ++m) {
      const SearchReport r = maximize(m, q, o.mode, o.threads);
      Json rec;
      rec["suite"] = "theorem2";
      rec["m"] = m;
      rec["q"] = q.q;
      rec["mode"] = to_string(o.mode);
      rec["search_value"] = to_decimal(r.best.value);
      rec["formula_value"] = to_decimal(max_order(m, q));
      Json w;
      w["m_prime"] = r.best.m_prime;
      w["parts"] = partition_json(r.best.partition);
      rec["witness"] = w;
      rec["candidates_evaluated"] = r.candidates_evaluated;
      if (!emit_check(emit, rec, r.agrees_with_formula)) return false;
    }
  return true;
}

bool verify_bounds_suite(const VerifyOptions& o,
                         const std::function<void(const Json&)>& emit) {
  for (const FieldSize& q : o.qs)
    for (unsigned long m = 1; m <= o.m_max; ++m) {
      const Natural value = max_order(m, q);
      const OrderBounds b = bounds(m, q);
      const bool sharp_expected = std::has_single_bit(m + 1);
      bool pass = b.lower < value && value <= b.upper;
      pass = pass && ((value == b.upper) == sharp_expected);
      if (b.strong_lower) pass = pass && *b.strong_lower < value;
      Json rec;
      rec["suite"] = "bounds";
      rec["m"] = m;
      rec["q"] = q.q;
      rec["lower"] = to_decimal(b.lower);
      rec["value"] = to_decimal(value);
      rec["upper"] = to_decimal(b.upper);
      if (b.strong_lower) rec["strong_lower"] = to_decimal(*b.strong_lower);
      rec["sharp_expected"] = sharp_expected;
      if (!emit_check(emit, rec, pass)) return false;
    }
  return true;
}

bool verify_gcd_suite(const VerifyOptions& o,
                      const std::function<void(const Json&)>& emit) {
  constexpr Sign signs[2] = {Sign::plus, Sign::minus};
  for (const FieldSize& q : o.qs)
    for (unsigned long a = 1; a <= o.m_max; ++a)
      for (unsigned long b = 1; b <= o.m_max; ++b)
        for (Sign ea : signs)
          for (Sign eb : signs) {
            const Natural closed = structured_gcd(q, a, ea, b, eb);
            const Natural euclid =
                nat_gcd(q_power_pm(q, a, ea), q_power_pm(q, b, eb));
            Json rec;
            rec["suite"] = "gcd";
            rec["q"] = q.q;
            rec["a"] = a;
            rec["ea"] = ea == Sign::plus ? "+" : "-";
            rec["b"] = b;
            rec["eb"] = eb == Sign::plus ? "+" : "-";
            rec["closed_form"] = to_decimal(closed);
            rec["euclid"] = to_decimal(euclid);
            if (!emit_check(emit, rec, closed == euclid)) return false;
          }
  return true;
}

bool verify_babylonians_suite(const VerifyOptions& o,
                              const std::function<void(const Json&)>& emit) {
  SplitMix64 rng(o.seed);
  for (uint64_t t = 0; t < o.tuples; ++t) {
    const std::vector<unsigned long> tuple = babylonian_tuple(rng, 40);
    unsigned long sum = 0;
    for (unsigned long d : tuple) sum += d;
    for (const FieldSize& q : o.qs) {
      Natural lhs = 1;
      for (unsigned long d : tuple) lhs *= nat_pow(q.q, d) + 1;
      Natural rhs = 1;
      for (unsigned x : two_adic_expansion(sum).exponents)
        rhs *= nat_pow(q.q, 1ul << x) + 1;
      Json rec;
      rec["suite"] = "babylonians";
      rec["q"] = q.q;
      rec["tuple"] = tuple;
      rec["sum"] = sum;
      rec["lhs"] = to_decimal(lhs);
      rec["rhs"] = to_decimal(rhs);
      if (!emit_check(emit, rec, lhs <= rhs)) return false;
    }
  }
  return true;
}

bool verify_cyclotomic_suite(const VerifyOptions& o,
                             const std::function<void(const Json&)>& emit) {
  const unsigned ell_max = static_cast<unsigned>(std::min<unsigned long>(o.m_max, 16));
  for (const FieldSize& q : o.qs)
    for (unsigned ell = 1; ell <= ell_max; ++ell) {
      const Natural lhs = cyclotomic_product(q, ell) * (q.q - 1);
      const Natural rhs = nat_pow(q.q, 1ul << ell) - 1;
      Json rec;
      rec["suite"] = "cyclotomic";
      rec["q"] = q.q;
      rec["ell"] = ell;
      rec["lhs"] = to_decimal(lhs);
      rec["rhs"] = to_decimal(rhs);
      if (!emit_check(emit, rec, lhs == rhs)) return false;
    }
  return true;
}

bool verify_table_suite(const VerifyOptions& o,
                        const std::function<void(const Json&)>& emit) {
  const unsigned long m_max = std::min<unsigned long>(o.m_max, 20);
  for (const FieldSize& q : o.qs)
    for (unsigned long m = 1; m <= m_max; ++m) {
      const Natural table = table_reference(m, q);
      const Natural formula = max_order(m, q);
      Json rec;
      rec["suite"] = "table";
      rec["m"] = m;
      rec["q"] = q.q;
      rec["table"] = to_decimal(table);
      rec["formula"] = to_decimal(formula);
      if (!emit_check(emit, rec, table == formula)) return false;
    }
  return true;
}

}  // namespace

bool run_verify_suite(VerifySuite suite, const VerifyOptions& options,
                      const std::function<void(const Json&)>& emit) {
  switch (suite) {
    case VerifySuite::theorem2: return verify_theorem2_suite(options, emit);
    case VerifySuite::bounds: return verify_bounds_suite(options, emit);
    case VerifySuite::gcd: return verify_gcd_suite(options, emit);
    case VerifySuite::babylonians: return verify_babylonians_suite(options, emit);
    case VerifySuite::cyclotomic: return verify_cyclotomic_suite(options, emit);
    case VerifySuite::table: return verify_table_suite(options, emit);
  }
  return false;
}

}  // namespace maxord
