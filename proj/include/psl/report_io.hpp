#pragma once

#include "psl/optimizer.hpp"

#include <string>
#include <vector>

namespace psl {

inline constexpr const char* report_schema_version = "pslopt-report-v1";

// JSON document with the documented field names. best_fitness and
// final_fitness are decimal strings, since they may not fit in 64 bits.
std::string report_to_json(const run_report& report, int indent = 2);
run_report report_from_json(const std::string& text);

// Improvement trace as CSV, header "elapsed_seconds,psl".
std::string trace_to_csv(const std::vector<trace_point>& trace);

}  // namespace psl
