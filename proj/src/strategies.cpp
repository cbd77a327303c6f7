#include "schemasim/strategies.hpp"

namespace schemasim {

std::string_view to_string(StrategyKind k) noexcept {
  switch (k) {
    case StrategyKind::Eager: return "eager";
    case StrategyKind::Incremental: return "incremental";
    case StrategyKind::Predictive: return "predictive";
    case StrategyKind::Lazy: return "lazy";
  }
  return "?";
}

std::optional<StrategyKind> parse_strategy(std::string_view text) noexcept {
  for (StrategyKind k : kAllStrategies) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

CatchUp Strategy::on_access(RunState& state, EntityId id) const { return lazy_on_access(state, id); }

CatchUp lazy_on_access(RunState& state, EntityId id) {
  return catch_up_entity(state.store.at(id), state.catalog, state.ledger, Bucket::OnRead,
                         state.config.catchup_charging);
}

namespace {

void catch_up_on_release(RunState& state, Entity& e) {
  catch_up_entity(e, state.catalog, state.ledger, Bucket::OnRelease, state.config.catchup_charging);
}

}  // namespace

void eager_on_release(RunState& state) {
  for (Entity& e : state.store.entities()) catch_up_on_release(state, e);
}

void incremental_on_release(RunState& state, int release_no) {
  if (!state.config.in_incremental_schedule(release_no)) return;
  for (Entity& e : state.store.entities()) catch_up_on_release(state, e);
}

void predictive_on_release(RunState& state) {
  for (EntityId id : prediction_set(state.tracker, state.store, state.config.prediction_fraction)) {
    Entity& e = state.store.at(id);
    if (needs_migration(e, state.catalog)) catch_up_on_release(state, e);
  }
}

namespace {

class Eager final : public Strategy {
 public:
  StrategyKind kind() const noexcept override { return StrategyKind::Eager; }
  void on_release(RunState& state, int) const override { eager_on_release(state); }
};

class Incremental final : public Strategy {
 public:
  StrategyKind kind() const noexcept override { return StrategyKind::Incremental; }
  void on_release(RunState& state, int release_no) const override { incremental_on_release(state, release_no); }
};

class Predictive final : public Strategy {
 public:
  StrategyKind kind() const noexcept override { return StrategyKind::Predictive; }
  void on_release(RunState& state, int) const override { predictive_on_release(state); }
};

class Lazy final : public Strategy {
 public:
  StrategyKind kind() const noexcept override { return StrategyKind::Lazy; }
  void on_release(RunState&, int) const override {}
};

}  // namespace

std::unique_ptr<Strategy> make_strategy(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Eager: return std::make_unique<Eager>();
    case StrategyKind::Incremental: return std::make_unique<Incremental>();
    case StrategyKind::Predictive: return std::make_unique<Predictive>();
    case StrategyKind::Lazy: return std::make_unique<Lazy>();
  }
  return nullptr;
}

}  // namespace schemasim
