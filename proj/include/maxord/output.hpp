#pragma once

#include <json.hpp>

#include <string>

#include "maxord/groupcheck.hpp"
#include "maxord/search.hpp"

namespace maxord {

// Records keep insertion order and render every big integer as a decimal
// string, so emitted lines are byte-stable and lossless.
using Json = nlohmann::ordered_json;

std::string part_string(const SignedPart& p);
Json partition_json(const SignedPartition& p);

Json formula_record(unsigned long m, FieldSize q, bool aut);
Json table_record(unsigned long m, FieldSize q);

std::string table_csv_header();
std::string table_csv_row(unsigned long m, FieldSize q);

Json search_record(const SearchReport& report, bool include_witness);
Json sample_record(const SampleReport& report);

}  // namespace maxord
