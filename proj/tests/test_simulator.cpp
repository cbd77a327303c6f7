#include <gtest/gtest.h>

#include "schemasim/simulator.hpp"
#include "schemasim/store.hpp"

using namespace schemasim;

TEST(Simulator, FirstReleaseEager) {
  RunState s(ScenarioConfig{}, 1);
  const auto eager = make_strategy(StrategyKind::Eager);
  const auto m = run_release(s, *eager, 1, nullptr);
  EXPECT_EQ(m.population, 1100U);
  EXPECT_EQ(m.on_read_io, 0U);
  EXPECT_GT(m.on_release_io, 0U);
  EXPECT_EQ(m.stale_count, 0U);
  EXPECT_EQ(m.access_count, 200U);
  EXPECT_EQ(m.latency.max, 4.2);
}

TEST(Simulator, FirstReleaseLazy) {
  RunState s(ScenarioConfig{}, 1);
  const auto lazy = make_strategy(StrategyKind::Lazy);
  const auto m = run_release(s, *lazy, 1, nullptr);
  EXPECT_EQ(m.on_release_io, 0U);
  EXPECT_EQ(m.on_read_io, 0U);  // the workload ran before the first SMO
  ASSERT_TRUE(m.smo.has_value());
  EXPECT_EQ(m.stale_count, affected_entities(*m.smo, allocate_population(1000, 1)));
}

TEST(Simulator, NoWorkloadLazyChargesNothing) {
  ScenarioConfig c;
  c.workload_executions = 0;
  const auto r = run_scenario(c, StrategyKind::Lazy, 3);
  for (const auto& m : r.releases) {
    EXPECT_EQ(m.on_read_io, 0U);
    EXPECT_EQ(m.on_release_io, 0U);
    EXPECT_TRUE(m.latency.empty);
  }
}

TEST(Simulator, EagerDefaults) {
  const auto r = run_scenario(ScenarioConfig{}, StrategyKind::Eager, 4);
  ASSERT_EQ(r.releases.size(), 12U);
  EXPECT_GT(r.releases.back().cumulated_cost.pico, 0);
  for (const auto& m : r.releases) EXPECT_EQ(m.on_read_cost.pico, 0);
  EXPECT_EQ(r.final_population, 3137U);
}

TEST(Simulator, ZeroReleases) {
  ScenarioConfig c;
  c.releases = 0;
  EXPECT_TRUE(run_scenario(c, StrategyKind::Lazy, 1).releases.empty());
}

TEST(Simulator, Deterministic) {
  for (StrategyKind k : kAllStrategies) {
    EXPECT_EQ(run_scenario(ScenarioConfig{}, k, 77), run_scenario(ScenarioConfig{}, k, 77));
  }
  EXPECT_NE(run_scenario(ScenarioConfig{}, StrategyKind::Lazy, 77),
            run_scenario(ScenarioConfig{}, StrategyKind::Lazy, 78));
}

TEST(Simulator, StreamsIndependentOfStrategy) {
  const auto a = run_scenario(ScenarioConfig{}, StrategyKind::Eager, 5);
  const auto b = run_scenario(ScenarioConfig{}, StrategyKind::Lazy, 5);
  for (std::size_t r = 0; r < a.releases.size(); ++r) {
    EXPECT_EQ(a.releases[r].smo, b.releases[r].smo);
    EXPECT_EQ(a.releases[r].population, b.releases[r].population);
  }
}

TEST(Simulator, RunInvariants) {
  ScenarioConfig c;
  const auto path = growth_path(1000, 0.1, 12);
  for (StrategyKind k : kAllStrategies) {
    const auto r = run_scenario(c, k, 6);
    std::uint64_t cum = 0;
    for (const auto& m : r.releases) {
      cum += m.on_read_io + m.on_release_io;
      EXPECT_EQ(m.cumulated_io, cum);
      EXPECT_EQ(m.population, path[static_cast<std::size_t>(m.release_no)]);
      EXPECT_EQ(m.conformance_violations, 0U);
      if (k == StrategyKind::Eager) EXPECT_EQ(m.stale_count, 0U);
      if (k == StrategyKind::Lazy) EXPECT_EQ(m.on_release_io, 0U);
      if (k == StrategyKind::Incremental && c.in_incremental_schedule(m.release_no)) EXPECT_EQ(m.stale_count, 0U);
    }
  }
}

TEST(Simulator, LazyHasLatencyTail) {
  const auto r = run_scenario(ScenarioConfig{}, StrategyKind::Lazy, 8);
  bool tail = false;
  for (const auto& m : r.releases) tail = tail || m.latency.max > m.latency.mean;
  EXPECT_TRUE(tail);
}

TEST(Simulator, JitterUsesOwnStream) {
  ScenarioConfig c;
  c.latency_jitter_ms = 0.5;
  const auto a = run_scenario(c, StrategyKind::Eager, 9);
  const auto b = run_scenario(ScenarioConfig{}, StrategyKind::Eager, 9);
  EXPECT_EQ(a.releases.back().cumulated_io, b.releases.back().cumulated_io);
  EXPECT_GT(a.releases.back().latency.max, 4.2);
  EXPECT_LE(a.releases.back().latency.max, 4.7);
}
