#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qcbounds/harness.hpp"

namespace qcbounds {

/// Column order of the sweep CSV.
inline constexpr const char* kCsvHeader =
    "function,interval_a,interval_b,alpha,lambda,q,regime,qc_holds,true_error,thm21,thm22,thm23,"
    "base_12,base_13,base_14,base_15,slack_min,verdict";

/// One row per report. Absent values are empty fields; reals use the shortest
/// round-trip decimal. slack_min and verdict summarize the theorem bounds.
void write_csv(std::ostream& out, const SweepResult& result);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const SummaryStats& summary);
nlohmann::json to_json(const CorollaryReport& report);
/// {"reports": [...], "summary": {...}}
nlohmann::json to_json(const SweepResult& result);
nlohmann::json to_json(const IdentityResult& result);

/// Reads a config object. Keys absent from the object keep their defaults();
/// grid entries may be numbers or fraction strings. Unknown keys are rejected.
SweepConfig config_from_json(const nlohmann::json& j);
SweepConfig load_config(const std::string& path);

}  // namespace qcbounds
