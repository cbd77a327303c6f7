#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schemasim/costing.hpp"
#include "schemasim/run_state.hpp"
#include "schemasim/strategies.hpp"

namespace schemasim {

struct RunResult {
  StrategyKind strategy = StrategyKind::Eager;
  std::int64_t run_index = 0;
  std::uint64_t seed = 0;
  std::vector<ReleaseMetrics> releases;
  std::uint64_t final_population = 0;
  std::string config_digest;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// One release in the fixed phase order: workload, SMO, on-release hook,
/// weight decay, growth. `previous` (null for release 1) supplies the running
/// totals. Throws ConsistencyError if any entity stops conforming to its
/// schema version.
ReleaseMetrics run_release(RunState& state, const Strategy& strategy, int release_no,
                           const ReleaseMetrics* previous);

/// A full run from a fresh population. Bit-identical for identical inputs.
RunResult run_scenario(const ScenarioConfig& config, StrategyKind strategy, std::uint64_t run_seed,
                       std::int64_t run_index = 0);

/// Entities with at least one pending migration step.
std::uint64_t count_stale(const EntityStore& store, const SchemaCatalog& catalog);

}  // namespace schemasim
