#pragma once

#include <string>

#include "siglab/census.hpp"
#include "siglab/harness.hpp"
#include "siglab/inertia.hpp"

namespace siglab {

inline constexpr int kReportSchemaVersion = 1;

// One JSON object per call, no trailing newline.
std::string to_json_line(const CheckReport& report);
std::string summary_json_line(const Summary& summary, CheckId id);
std::string inertia_json_line(const std::string& graph6, const Graph& g, const Inertia& in);
std::string census_json_line(const std::string& graph6, const CycleCensus& c);

}  // namespace siglab
