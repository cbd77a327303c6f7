#include "schemasim/workload.hpp"

#include <algorithm>
#include <cmath>

#include "schemasim/costing.hpp"
#include "schemasim/kernels.hpp"
#include "schemasim/run_state.hpp"
#include "schemasim/strategies.hpp"

namespace schemasim {

void AccessTracker::decay_all() noexcept { kernels::scale(weights_, 1.0 - alpha_); }

namespace {

EntityId uniform_over(Rng& rng, std::span<const EntityId> ids) { return ids[rng.below(ids.size())]; }

EntityId draw_candidate(Rng& rng, const AccessSettings& s, const EntityStore& store) {
  if (s.distribution == Distribution::Pareto) {
    const auto pool = rng.uniform() < s.hot_access_share ? store.hot_ids() : store.cold_ids();
    if (!pool.empty()) return uniform_over(rng, pool);
  }
  return static_cast<EntityId>(rng.below(store.size()));
}

}  // namespace

EntityId sample_access(Rng& rng, const AccessSettings& s, const EntityStore& store) {
  const double w = s.player_access_weight;
  for (;;) {
    const EntityId id = draw_candidate(rng, s, store);
    if (w == 1.0) return id;
    const bool player = store.at(id).type == EntityType::Player;
    const double accept = w > 1.0 ? (player ? 1.0 : 1.0 / w) : (player ? w : 1.0);
    if (accept >= 1.0 || rng.uniform() < accept) return id;
  }
}

std::vector<EntityId> prediction_set(const AccessTracker& tracker, const EntityStore& store, double fraction) {
  const std::size_t population = store.size();
  const double target = std::ceil(fraction * static_cast<double>(population) - 1e-9);
  const std::size_t k = std::min(population, static_cast<std::size_t>(std::max(target, 0.0)));

  std::vector<EntityId> ids(population);
  for (std::size_t i = 0; i < population; ++i) ids[i] = i;
  const auto weights = tracker.weights();
  auto by_rank = [&](EntityId a, EntityId b) {
    const double wa = a < weights.size() ? weights[a] : 0.0;
    const double wb = b < weights.size() ? weights[b] : 0.0;
    return wa != wb ? wa > wb : a < b;
  };
  std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k), ids.end(), by_rank);
  ids.resize(k);
  return ids;
}

std::vector<double> AccessLog::latencies() const {
  std::vector<double> out;
  out.reserve(accesses.size());
  for (const auto& a : accesses) out.push_back(a.latency_ms);
  return out;
}

AccessLog execute_workload(RunState& state, const Strategy& strategy, int release_no) {
  AccessLog log;
  log.release_no = release_no;
  const auto count = std::max<std::int64_t>(state.config.accesses_per_release(), 0);
  if (state.store.empty()) return log;
  const auto settings = AccessSettings::from(state.config);
  state.tracker.resize(state.store.size());
  log.accesses.reserve(static_cast<std::size_t>(count));

  for (std::int64_t i = 0; i < count; ++i) {
    const EntityId id = sample_access(state.streams.workload, settings, state.store);
    const CatchUp c = strategy.on_access(state, id);
    double latency = access_latency(c.k_single + c.k_multi_src, c.k_multi_dest, state.config);
    if (state.config.latency_jitter_ms > 0.0) {
      latency += state.config.latency_jitter_ms * state.streams.jitter.uniform();
    }
    log.accesses.push_back(Access{id, latency, c.io()});
    state.tracker.record_access(id);
  }
  return log;
}

}  // namespace schemasim
