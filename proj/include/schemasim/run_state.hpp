#pragma once

#include <cstdint>

#include "schemasim/costing.hpp"
#include "schemasim/domain.hpp"
#include "schemasim/rng.hpp"
#include "schemasim/store.hpp"
#include "schemasim/workload.hpp"

namespace schemasim {

/// Independent random streams of one run, all derived from the run seed.
struct RunStreams {
  Rng population;
  Rng workload;
  Rng smo;
  Rng jitter;

  explicit RunStreams(std::uint64_t run_seed)
      : population(derive_stream_seed(run_seed, "population")),
        workload(derive_stream_seed(run_seed, "workload")),
        smo(derive_stream_seed(run_seed, "smo")),
        jitter(derive_stream_seed(run_seed, "jitter")) {}
};

/// Everything one simulation run mutates.
struct RunState {
  ScenarioConfig config;
  SchemaCatalog catalog;
  RunStreams streams;
  EntityStore store;
  AccessTracker tracker;
  IoLedger ledger;

  /// Version-0 catalog and the seeded initial population.
  RunState(const ScenarioConfig& cfg, std::uint64_t run_seed);
};

}  // namespace schemasim
