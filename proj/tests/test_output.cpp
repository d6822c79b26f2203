#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "maxord/output.hpp"
#include "maxord/verify.hpp"

using namespace maxord;

namespace {
const FieldSize kQ2 = FieldSize::of(2);
const FieldSize kQ4 = FieldSize::of(4);
}  // namespace

TEST_CASE("decimal strings round-trip") {
  for (unsigned long m : {1ul, 20ul, 64ul}) {
    const Natural v = max_order(m, kQ4);
    CHECK(Natural(to_decimal(v)) == v);
  }
  const Json rec = formula_record(64, kQ4, false);
  CHECK(Natural(rec["value"].get<std::string>()) == max_order(64, kQ4));
}

TEST_CASE("formula record") {
  const Json rec = formula_record(12, kQ2, false);
  CHECK(rec["m"] == 12);
  CHECK(rec["q"] == 2);
  CHECK(rec["value"] == "7905");
  CHECK(rec["case_tag"] == "Q2_OddLarge");
  CHECK(rec["bounds"]["lower"] == "4096");
  CHECK(rec["bounds"]["upper"] == "8191");

  const Json aut = formula_record(1, kQ4, true);
  CHECK(aut["value"] == "6");
  CHECK(aut["aut"] == true);
}

TEST_CASE("table rows") {
  CHECK(table_csv_header() == "m,q,value,case_tag");
  CHECK(table_csv_row(15, kQ2) == "15,2,65535,Q2_M0LE3");
  const Json row = table_record(3, FieldSize::of(8));
  CHECK(row["value"] == "585");
}

TEST_CASE("search record carries the witness") {
  const SearchReport r = maximize(4, kQ4, SearchMode::exhaustive);
  const Json rec = search_record(r, true);
  CHECK(rec["value"] == "315");
  CHECK(rec["agrees_with_formula"] == true);
  CHECK(rec["witness"]["m_prime"] == 0);
  CHECK(rec["witness"]["parts"] == Json::array({"3+", "1-"}));
  CHECK_FALSE(search_record(r, false).contains("witness"));
}

TEST_CASE("sample record") {
  const SampleReport r = sample_max_order(1, kQ2, 200, 3);
  const Json rec = sample_record(r);
  CHECK(rec["bound"] == "3");
  CHECK(rec["max_observed"] == "3");
  CHECK(rec["violated"] == false);
  uint64_t total = 0;
  for (const auto& [key, count] : rec["histogram"].items())
    total += count.get<uint64_t>();
  CHECK(total == 200);
}

TEST_CASE("verify suites pass on small ranges") {
  VerifyOptions o;
  o.qs = {kQ2, kQ4};
  o.m_max = 6;
  o.tuples = 50;
  for (VerifySuite suite :
       {VerifySuite::theorem2, VerifySuite::bounds, VerifySuite::gcd,
        VerifySuite::babylonians, VerifySuite::cyclotomic, VerifySuite::table}) {
    size_t records = 0;
    bool all_pass = true;
    const bool ok = run_verify_suite(suite, o, [&](const Json& rec) {
      ++records;
      all_pass = all_pass && rec["pass"].get<bool>();
      CHECK(rec["suite"] == to_string(suite));
    });
    CAPTURE(to_string(suite));
    CHECK(ok);
    CHECK(all_pass);
    CHECK(records > 0);
  }
}

TEST_CASE("verify gcd emits one record per case") {
  VerifyOptions o;
  o.qs = {kQ2};
  o.m_max = 4;
  size_t records = 0;
  CHECK(run_verify_suite(VerifySuite::gcd, o, [&](const Json&) { ++records; }));
  CHECK(records == 4 * 4 * 4);
}

TEST_CASE("babylonian tuples respect their constraints") {
  SplitMix64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto tuple = babylonian_tuple(rng, 40);
    REQUIRE(!tuple.empty());
    unsigned long sum = 0;
    std::set<unsigned> vals;
    for (unsigned long d : tuple) {
      sum += d;
      CHECK(vals.insert(two_adic_valuation(d).val).second);
    }
    CHECK(sum <= 40);
  }
}

TEST_CASE("suite names parse") {
  CHECK(parse_suite("theorem2") == VerifySuite::theorem2);
  CHECK(parse_suite("table") == VerifySuite::table);
  CHECK_FALSE(parse_suite("nonsense").has_value());
}
