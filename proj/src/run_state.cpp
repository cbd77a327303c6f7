#include "schemasim/run_state.hpp"

namespace schemasim {

RunState::RunState(const ScenarioConfig& cfg, std::uint64_t run_seed)
    : config(cfg),
      catalog(SchemaCatalog::initial(static_cast<std::size_t>(cfg.properties_per_type))),
      streams(run_seed),
      store(seed_population(cfg, catalog, streams.population)),
      tracker(cfg.smoothing_alpha) {
  tracker.resize(store.size());
}

}  // namespace schemasim
