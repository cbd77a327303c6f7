#include <gtest/gtest.h>

#include "schemasim/evolution.hpp"
#include "schemasim/simulator.hpp"
#include "schemasim/strategies.hpp"

using namespace schemasim;

namespace {

ScenarioConfig one_to_one() {
  ScenarioConfig c;
  c.growth_rate = 0.0;
  return c;
}

Smo make(SmoKind k, EntityType src, std::optional<EntityType> dst, std::string prop,
         std::optional<std::string> np = std::nullopt) {
  return Smo{k, src, dst, std::move(prop), std::move(np), 1};
}

}  // namespace

TEST(Strategies, Names) {
  for (StrategyKind k : kAllStrategies) {
    EXPECT_EQ(parse_strategy(to_string(k)), k);
    EXPECT_EQ(make_strategy(k)->kind(), k);
  }
}

TEST(Strategies, EagerAddOnMission) {
  RunState s(one_to_one(), 1);
  s.ledger.begin_release(1);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Add, EntityType::Mission, std::nullopt, "added_r1"));
  eager_on_release(s);
  EXPECT_EQ(s.ledger.current().on_release, (IoCounts{333, 333}));
  EXPECT_EQ(s.ledger.current().on_read.total(), 0U);
  EXPECT_EQ(s.store.stale_count(1), 0U);
}

TEST(Strategies, EagerMoveMissionToPlace) {
  RunState s(one_to_one(), 1);
  s.ledger.begin_release(1);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Move, EntityType::Mission, EntityType::Place, "p3", "p3_r1"));
  eager_on_release(s);
  EXPECT_EQ(s.ledger.current().on_release, (IoCounts{666 + 333, 666}));
  EXPECT_EQ(s.ledger.current().on_release.total(), 1665U);
  EXPECT_DOUBLE_EQ(money(1665, 0.2, 10000).usd(), 3.33);
}

TEST(Strategies, EagerWithNoEntitiesOfType) {
  ScenarioConfig c = one_to_one();
  c.initial_entities = 1;  // a single Player
  RunState s(c, 1);
  s.ledger.begin_release(1);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Add, EntityType::Place, std::nullopt, "added_r1"));
  eager_on_release(s);
  EXPECT_EQ(s.ledger.current().on_release.total(), 0U);
}

TEST(Strategies, LazyAccessCatchesUpOnce) {
  RunState s(one_to_one(), 2);
  s.ledger.begin_release(1);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Add, EntityType::Player, std::nullopt, "added_r1"));
  apply_smo_to_catalog(s.catalog, make(SmoKind::Rename, EntityType::Player, std::nullopt, "p1", "p1_r2"));
  const EntityId player = s.store.ids_of(EntityType::Player).front();
  const EntityId place = s.store.ids_of(EntityType::Place).front();

  EXPECT_EQ(lazy_on_access(s, place).io(), 0U);
  const auto first = lazy_on_access(s, player);
  EXPECT_EQ(first.k_single, 2U);
  EXPECT_EQ(s.ledger.current().on_read, (IoCounts{2, 2}));  // per-step charging
  EXPECT_EQ(lazy_on_access(s, player).io(), 0U);
  EXPECT_EQ(s.ledger.current().on_read, (IoCounts{2, 2}));
}

TEST(Strategies, LazyAccessBatchCharging) {
  ScenarioConfig c = one_to_one();
  c.catchup_charging = CatchUpCharging::Batch;
  RunState s(c, 2);
  s.ledger.begin_release(1);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Add, EntityType::Player, std::nullopt, "added_r1"));
  apply_smo_to_catalog(s.catalog, make(SmoKind::Rename, EntityType::Player, std::nullopt, "p1", "p1_r2"));
  lazy_on_access(s, s.store.ids_of(EntityType::Player).front());
  EXPECT_EQ(s.ledger.current().on_read, (IoCounts{1, 1}));
}

TEST(Strategies, IncrementalSchedule) {
  RunState s(one_to_one(), 3);
  s.ledger.begin_release(1);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Add, EntityType::Player, std::nullopt, "added_r1"));
  incremental_on_release(s, 4);
  EXPECT_EQ(s.ledger.current().on_release.total(), 0U);
  incremental_on_release(s, 5);
  EXPECT_EQ(s.ledger.current().on_release, (IoCounts{334, 334}));
  EXPECT_EQ(count_stale(s.store, s.catalog), 0U);
}

TEST(Strategies, PredictiveFullFractionMigratesEverything) {
  ScenarioConfig c = one_to_one();
  c.prediction_fraction = 1.0;
  RunState s(c, 4);
  s.ledger.begin_release(1);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Copy, EntityType::Player, EntityType::Mission, "p1", "p1_r1"));
  predictive_on_release(s);
  EXPECT_EQ(count_stale(s.store, s.catalog), 0U);
  EXPECT_EQ(s.ledger.current().on_release, (IoCounts{334 + 333 + 333, 334 + 333}));
}

TEST(Strategies, PredictiveMigratesOnlyPredictedStale) {
  ScenarioConfig c = one_to_one();
  c.prediction_fraction = 0.1;
  RunState s(c, 5);
  s.ledger.begin_release(1);
  for (EntityId id = 500; id < 600; ++id) s.tracker.record_access(id);
  apply_smo_to_catalog(s.catalog, make(SmoKind::Add, EntityType::Place, std::nullopt, "added_r1"));
  predictive_on_release(s);
  std::uint64_t migrated_places = 0;
  for (EntityId id = 500; id < 600; ++id) {
    const Entity& e = s.store.at(id);
    if (e.type == EntityType::Place) {
      EXPECT_FALSE(needs_migration(e, s.catalog));
      ++migrated_places;
    }
  }
  EXPECT_EQ(s.ledger.current().on_release, (IoCounts{migrated_places, migrated_places}));
  EXPECT_EQ(count_stale(s.store, s.catalog), 333U - migrated_places);
}

TEST(Strategies, PairedOrderingOnManySeeds) {
  ScenarioConfig c;
  c.releases = 8;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto cost = [&](StrategyKind k) { return run_scenario(c, k, seed).releases.back().cumulated_io; };
    const auto eager = cost(StrategyKind::Eager);
    const auto lazy = cost(StrategyKind::Lazy);
    const auto inc = cost(StrategyKind::Incremental);
    const auto pred = cost(StrategyKind::Predictive);
    EXPECT_LE(lazy, inc);
    EXPECT_LE(inc, eager);
    EXPECT_LE(lazy, pred);
    EXPECT_LE(pred, eager);
  }
}

TEST(Strategies, ZeroPredictionFractionIsLazy) {
  ScenarioConfig c;
  c.prediction_fraction = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto p = run_scenario(c, StrategyKind::Predictive, seed);
    auto l = run_scenario(c, StrategyKind::Lazy, seed);
    p.strategy = l.strategy;
    EXPECT_EQ(p, l);
  }
}

TEST(Strategies, IncrementalEveryReleaseMatchesEagerCost) {
  ScenarioConfig c;
  c.incremental_schedule.clear();
  for (std::int64_t r = 1; r <= c.releases; ++r) c.incremental_schedule.push_back(r);
  const auto inc = run_scenario(c, StrategyKind::Incremental, 9);
  const auto eager = run_scenario(c, StrategyKind::Eager, 9);
  for (std::size_t r = 0; r < inc.releases.size(); ++r) {
    EXPECT_EQ(inc.releases[r].on_release_io, eager.releases[r].on_release_io);
    EXPECT_EQ(inc.releases[r].on_read_io, 0U);
  }
}
