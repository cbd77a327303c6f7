#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "schemasim/domain.hpp"
#include "schemasim/rng.hpp"
#include "schemasim/store.hpp"

namespace schemasim {

struct RunState;
class Strategy;

/// Exponential-smoothing access scores, one per entity id.
/// An access adds alpha; a release boundary multiplies every score by 1 - alpha.
class AccessTracker {
 public:
  explicit AccessTracker(double alpha = 0.5) : alpha_(alpha) {}

  /// Grows the table to `entities` slots; new slots start at 0.
  void resize(std::size_t entities) { weights_.resize(entities, 0.0); }
  void record_access(EntityId id) { weights_.at(id) += alpha_; }
  void decay_all() noexcept;

  double alpha() const noexcept { return alpha_; }
  double weight(EntityId id) const { return weights_.at(id); }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<double> weights() noexcept { return weights_; }

 private:
  double alpha_;
  std::vector<double> weights_;
};

struct AccessSettings {
  Distribution distribution = Distribution::Pareto;
  double hot_access_share = 0.8;
  double player_access_weight = 1.0;

  static AccessSettings from(const ScenarioConfig& c) noexcept {
    return {c.distribution, c.hot_access_share, c.player_access_weight};
  }
};

/// One entity id. Uniform: over all entities. Pareto: over the hot set with
/// probability hot_access_share, else over the cold set; an empty set falls
/// back to all entities. A player_access_weight w != 1 rescales Player draws by
/// rejection (non-Player candidates accepted with 1/w when w > 1, Player
/// candidates with w when w < 1). Requires a non-empty store.
EntityId sample_access(Rng& rng, const AccessSettings& settings, const EntityStore& store);

/// The ceil(fraction x population) ids with the highest weight, ties broken by
/// ascending id, in rank order.
std::vector<EntityId> prediction_set(const AccessTracker& tracker, const EntityStore& store, double fraction);

struct Access {
  EntityId id = 0;
  double latency_ms = 0.0;
  std::uint64_t io = 0;
};

struct AccessLog {
  int release_no = 0;
  std::vector<Access> accesses;

  std::vector<double> latencies() const;
};

/// Runs the release's accesses through the strategy's on-access hook.
AccessLog execute_workload(RunState& state, const Strategy& strategy, int release_no);

}  // namespace schemasim
