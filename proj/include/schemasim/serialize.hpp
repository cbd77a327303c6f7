#pragma once

// JSON forms of configurations, run records, batch summaries and findings.
// Every writer is deterministic: identical values give identical bytes.

#include <string>
#include <vector>

#include "json.hpp"
#include "schemasim/invariants.hpp"
#include "schemasim/montecarlo.hpp"

namespace schemasim {

inline constexpr const char* kToolName = "schemasim";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Resolved configuration with typed values, keys in canonical order.
Json config_to_json(const ScenarioConfig& config);
ScenarioConfig config_from_json(const Json& j);

Json smo_to_json(const Smo& smo);
Smo smo_from_json(const Json& j);

/// One JSONL record: run identity followed by the release metrics.
Json release_record(const RunResult& run, const ReleaseMetrics& m);
/// Rebuilds a run from its records (ordered by release).
RunResult run_from_records(const std::vector<Json>& records);

Json stats_to_json(const Stats& s);
Stats stats_from_json(const Json& j);

Json batch_to_json(const BatchResult& b);
BatchResult batch_from_json(const Json& j);

Json findings_to_json(const std::vector<Finding>& findings);
std::vector<Finding> findings_from_json(const Json& j);

/// Pretty-printed document with a trailing newline.
std::string dump(const Json& j);

}  // namespace schemasim
