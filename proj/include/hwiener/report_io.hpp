#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hwiener/extremal.hpp"
#include "hwiener/index_value.hpp"
#include "hwiener/proof_moves.hpp"

namespace hwiener {

// JSON: exact values are decimal strings ("31", "7/2"), floats are numbers.
nlohmann::json to_json(const IndexValue& v);
IndexValue index_value_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<DominanceCheck>& checks);
nlohmann::json to_json(const SearchResult& result);

// CSV with a fixed header row. Fields containing ',', '"' or newlines are
// double-quoted.
inline constexpr std::string_view kIndexCsvHeader = "index_name,value,mode";
inline constexpr std::string_view kReportCsvHeader =
    "n,weight,monotonicity,graphs_scanned,shards,shard_count,min_value,min_mode,max_value,max_mode,"
    "argmin_forms,argmax_forms,lower_value,lower_unique,upper_value,upper_unique";
inline constexpr std::string_view kDominanceCsvHeader = "r,n,f3,fr,mode,pass";

std::string to_csv(const std::vector<IndexValue>& values);
std::vector<IndexValue> index_values_from_csv(std::string_view text);

std::string to_csv(const VerificationReport& r);
// Restores the CSV columns only; expected values and the counterexample are
// not part of the CSV layout.
VerificationReport report_from_csv(std::string_view text);

std::string to_csv(const std::vector<DominanceCheck>& checks);

// Split one CSV record into fields, honouring double quotes.
std::vector<std::string> split_csv_record(std::string_view line);
std::string csv_field(std::string_view raw);

}  // namespace hwiener
