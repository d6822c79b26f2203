#include "maxord/output.hpp"

#include "maxord/formula.hpp"

namespace maxord {

std::string part_string(const SignedPart& p) {
  return std::to_string(p.d) + (p.sign == Sign::plus ? "+" : "-");
}

Json partition_json(const SignedPartition& p) {
  Json parts = Json::array();
  for (const SignedPart& part : p.parts) parts.push_back(part_string(part));
  return parts;
}

Json formula_record(unsigned long m, FieldSize q, bool aut) {
  Json rec;
  rec["command"] = "formula";
  rec["m"] = m;
  rec["q"] = q.q;
  rec["aut"] = aut;
  if (aut) {
    rec["value"] = to_decimal(aut_max_order(m, q));
    return rec;
  }
  rec["value"] = to_decimal(max_order(m, q));
  rec["case_tag"] = to_string(classify(m, q).tag);
  const OrderBounds b = bounds(m, q);
  Json jb;
  jb["lower"] = to_decimal(b.lower);
  jb["upper"] = to_decimal(b.upper);
  if (b.strong_lower) jb["strong_lower"] = to_decimal(*b.strong_lower);
  rec["bounds"] = jb;
  return rec;
}

Json table_record(unsigned long m, FieldSize q) {
  Json rec;
  rec["m"] = m;
  rec["q"] = q.q;
  rec["value"] = to_decimal(max_order(m, q));
  rec["case_tag"] = to_string(classify(m, q).tag);
  return rec;
}

std::string table_csv_header() { return "m,q,value,case_tag"; }

std::string table_csv_row(unsigned long m, FieldSize q) {
  return std::to_string(m) + "," + std::to_string(q.q) + "," +
         to_decimal(max_order(m, q)) + "," + to_string(classify(m, q).tag);
}

Json search_record(const SearchReport& report, bool include_witness) {
  Json rec;
  rec["command"] = "search";
  rec["m"] = report.m;
  rec["q"] = report.q.q;
  rec["mode"] = to_string(report.mode);
  rec["value"] = to_decimal(report.best.value);
  rec["candidates_evaluated"] = report.candidates_evaluated;
  rec["agrees_with_formula"] = report.agrees_with_formula;
  if (include_witness) {
    Json w;
    w["m_prime"] = report.best.m_prime;
    w["parts"] = partition_json(report.best.partition);
    rec["witness"] = w;
  }
  return rec;
}

Json sample_record(const SampleReport& report) {
  Json rec;
  rec["command"] = "sample";
  rec["m"] = report.m;
  rec["q"] = report.q.q;
  rec["samples"] = report.samples;
  rec["seed"] = report.seed;
  rec["bound"] = to_decimal(report.bound);
  rec["max_observed"] = to_decimal(report.max_observed);
  Json hist;
  for (const auto& [order, count] : report.histogram)
    hist[std::to_string(order)] = count;
  rec["histogram"] = hist;
  rec["violated"] = report.violated;
  return rec;
}

}  // namespace maxord
