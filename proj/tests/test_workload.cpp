#include <gtest/gtest.h>

#include <algorithm>

#include "schemasim/run_state.hpp"
#include "schemasim/strategies.hpp"
#include "schemasim/workload.hpp"

using namespace schemasim;

namespace {

EntityStore make_store(std::size_t n, double hot_fraction, std::uint64_t seed) {
  ScenarioConfig c;
  c.initial_entities = static_cast<std::int64_t>(n);
  c.pareto_hot_fraction = hot_fraction;
  Rng rng(seed);
  return seed_population(c, SchemaCatalog::initial(), rng);
}

}  // namespace

TEST(Workload, UniformHitsEveryEntityEvenly) {
  const auto store = make_store(1000, 0.2, 1);
  Rng rng(2);
  std::vector<int> hits(1000);
  AccessSettings s{Distribution::Uniform, 0.8, 1.0};
  for (int i = 0; i < 100000; ++i) ++hits[sample_access(rng, s, store)];
  for (int h : hits) EXPECT_NEAR(h, 100, 50);
}

TEST(Workload, ParetoHotShare) {
  const auto store = make_store(1000, 0.2, 3);
  Rng rng(4);
  int hot = 0;
  AccessSettings s{Distribution::Pareto, 0.8, 1.0};
  for (int i = 0; i < 100000; ++i) hot += store.at(sample_access(rng, s, store)).hot ? 1 : 0;
  EXPECT_NEAR(hot / 100000.0, 0.80, 0.01);
}

TEST(Workload, EmptyHotSetFallsBackToUniform) {
  const auto store = make_store(500, 0.0, 5);
  Rng a(6);
  AccessSettings s{Distribution::Pareto, 0.8, 1.0};
  std::vector<int> hits(500);
  for (int i = 0; i < 50000; ++i) ++hits[sample_access(a, s, store)];
  for (int h : hits) EXPECT_NEAR(h, 100, 35);
}

TEST(Workload, PlayerBoost) {
  const auto store = make_store(1000, 0.2, 7);
  Rng rng(8);
  AccessSettings s{Distribution::Uniform, 0.8, 3.0};
  int players = 0;
  for (int i = 0; i < 60000; ++i) players += store.at(sample_access(rng, s, store)).type == EntityType::Player;
  // 334 Player at weight 3 vs 666 others at weight 1: 1002 / 1668.
  EXPECT_NEAR(players / 60000.0, 1002.0 / 1668.0, 0.01);
}

TEST(Workload, Smoothing) {
  AccessTracker t(0.5);
  t.resize(3);
  EXPECT_EQ(t.weight(2), 0.0);
  t.record_access(0);
  for (int i = 0; i < 3; ++i) t.decay_all();
  EXPECT_DOUBLE_EQ(t.weight(0), 0.0625);
}

TEST(Workload, RecencyOutranksOldFrequency) {
  AccessTracker t(0.5);
  t.resize(2);
  for (int i = 0; i < 10; ++i) t.record_access(0);
  for (int i = 0; i < 5; ++i) t.decay_all();
  t.record_access(1);
  t.record_access(1);
  EXPECT_DOUBLE_EQ(t.weight(0), 0.15625);
  EXPECT_DOUBLE_EQ(t.weight(1), 1.0);
  const auto store = make_store(2, 0.0, 1);
  EXPECT_EQ(prediction_set(t, store, 0.5), std::vector<EntityId>{1});
}

TEST(Workload, PredictionSetSizes) {
  const auto store = make_store(1000, 0.2, 9);
  AccessTracker t(0.5);
  t.resize(1000);
  Rng rng(10);
  for (int i = 0; i < 700; ++i) t.record_access(rng.below(1000));
  EXPECT_TRUE(prediction_set(t, store, 0.0).empty());
  EXPECT_EQ(prediction_set(t, store, 1.0).size(), 1000U);

  const auto set = prediction_set(t, store, 0.3);
  ASSERT_EQ(set.size(), 300U);
  double min_in = 1e9;
  for (EntityId id : set) min_in = std::min(min_in, t.weight(id));
  for (EntityId id = 0; id < 1000; ++id) {
    if (std::find(set.begin(), set.end(), id) == set.end()) EXPECT_LE(t.weight(id), min_in);
  }
  EXPECT_EQ(prediction_set(t, make_store(1001, 0.2, 9), 0.3).size(), 301U);
}

TEST(Workload, TiesBreakByAscendingId) {
  const auto store = make_store(10, 0.0, 1);
  AccessTracker t(0.5);
  t.resize(10);
  EXPECT_EQ(prediction_set(t, store, 0.3), (std::vector<EntityId>{0, 1, 2}));
}

TEST(Workload, ExecuteCountsAndEagerIsFree) {
  ScenarioConfig c;
  RunState state(c, 11);
  const auto eager = make_strategy(StrategyKind::Eager);
  state.ledger.begin_release(1);
  const auto log = execute_workload(state, *eager, 1);
  EXPECT_EQ(log.accesses.size(), 200U);
  EXPECT_EQ(state.ledger.current().on_read.total(), 0U);

  c.workload_executions = 0;
  RunState idle(c, 11);
  idle.ledger.begin_release(1);
  EXPECT_TRUE(execute_workload(idle, *eager, 1).accesses.empty());
}
