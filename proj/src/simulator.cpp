#include "schemasim/simulator.hpp"

#include <fmt/format.h>

#include "schemasim/config_io.hpp"
#include "schemasim/evolution.hpp"
#include "schemasim/workload.hpp"

namespace schemasim {

std::uint64_t count_stale(const EntityStore& store, const SchemaCatalog& catalog) {
  std::array<std::uint32_t, kEntityTypeCount> last{};
  for (EntityType t : kEntityTypes) last[index_of(t)] = last_affecting_version(catalog, t);
  std::uint64_t n = 0;
  for (const Entity& e : store.entities()) n += e.version_no < last[index_of(e.type)] ? 1 : 0;
  return n;
}

ReleaseMetrics run_release(RunState& state, const Strategy& strategy, int release_no,
                           const ReleaseMetrics* previous) {
  const ScenarioConfig& cfg = state.config;
  state.ledger.begin_release(release_no);

  const AccessLog log = execute_workload(state, strategy, release_no);

  const Smo smo = sample_smo(state.streams.smo, cfg.multi_type_share, state.catalog, release_no);
  apply_smo_to_catalog(state.catalog, smo);

  strategy.on_release(state, release_no);

  state.tracker.decay_all();

  grow_population(state.store, state.catalog, cfg.growth_rate, cfg.cardinality_n, cfg.pareto_hot_fraction,
                  state.streams.population);
  state.tracker.resize(state.store.size());

  ReleaseMetrics m;
  m.release_no = release_no;
  const ReleaseIo& io = state.ledger.current();
  m.on_read = io.on_read;
  m.on_release = io.on_release;
  m.on_read_io = io.on_read.total();
  m.on_release_io = io.on_release.total();
  m.cumulated_io = (previous ? previous->cumulated_io : 0) + m.on_read_io + m.on_release_io;
  m.on_read_cost = money(m.on_read_io, cfg.price_per_million_io, cfg.scale_factor);
  m.on_release_cost = money(m.on_release_io, cfg.price_per_million_io, cfg.scale_factor);
  m.cumulated_cost = (previous ? previous->cumulated_cost : Money{}) + m.on_read_cost + m.on_release_cost;
  const auto latencies = log.latencies();
  m.latency = release_latency_stats(latencies);
  m.access_count = latencies.size();
  m.population = state.store.size();
  m.stale_count = count_stale(state.store, state.catalog);
  for (const Entity& e : state.store.entities()) m.conformance_violations += conforms(e, state.catalog) ? 0 : 1;
  m.smo = smo;

  if (m.conformance_violations > 0) {
    throw ConsistencyError(fmt::format("{} entities violate their schema after release {} ({})",
                                       m.conformance_violations, release_no, to_string(strategy.kind())));
  }
  return m;
}

RunResult run_scenario(const ScenarioConfig& config, StrategyKind kind, std::uint64_t run_seed,
                       std::int64_t run_index) {
  RunResult result;
  result.strategy = kind;
  result.run_index = run_index;
  result.seed = run_seed;
  result.config_digest = config_digest(config);

  RunState state(config, run_seed);
  const auto strategy = make_strategy(kind);
  for (std::int64_t r = 1; r <= config.releases; ++r) {
    const ReleaseMetrics* prev = result.releases.empty() ? nullptr : &result.releases.back();
    result.releases.push_back(run_release(state, *strategy, static_cast<int>(r), prev));
  }
  result.final_population = state.store.size();
  return result;
}

}  // namespace schemasim
