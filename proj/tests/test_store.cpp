#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "schemasim/store.hpp"

using namespace schemasim;

namespace {

// Exhaustive apportionment oracle: the allocation (summing to total) that
// minimises the largest-remainder objective, i.e. each count is floor or ceil
// of its quota and the ceilings go to the largest fractional parts.
TypeCounts brute_force(std::size_t total, std::int64_t n) {
  const double w[3] = {1.0, static_cast<double>(n), static_cast<double>(n * n)};
  const double sum = w[0] + w[1] + w[2];
  TypeCounts best{};
  double best_score = 1e300;
  for (std::size_t a = 0; a <= total; ++a) {
    for (std::size_t b = 0; a + b <= total; ++b) {
      const std::size_t c = total - a - b;
      const double q[3] = {total * w[0] / sum, total * w[1] / sum, total * w[2] / sum};
      const double score = std::fabs(a - q[0]) + std::fabs(b - q[1]) + std::fabs(c - q[2]);
      if (score < best_score - 1e-9) {
        best_score = score;
        best = {a, b, c};
      }
    }
  }
  return best;
}

}  // namespace

TEST(Store, AllocationExamples) {
  EXPECT_EQ(allocate_population(1000, 1), (TypeCounts{334, 333, 333}));
  EXPECT_EQ(allocate_population(1000, 10), (TypeCounts{9, 90, 901}));
  EXPECT_EQ(allocate_population(1000, 25), (TypeCounts{2, 38, 960}));
  EXPECT_EQ(allocate_population(0, 25), (TypeCounts{0, 0, 0}));
  EXPECT_EQ(allocate_population(100, 1), (TypeCounts{34, 33, 33}));
  EXPECT_EQ(allocate_population(1, 1), (TypeCounts{1, 0, 0}));
}

TEST(Store, AllocationMatchesBruteForce) {
  for (std::int64_t n : {1, 10, 25}) {
    for (std::size_t total = 0; total <= 200; total += 7) {
      const auto got = allocate_population(total, n);
      EXPECT_EQ(got[0] + got[1] + got[2], total);
      const auto want = brute_force(total, n);
      // Equal objective; ties resolved towards earlier types by our rule.
      const double w[3] = {1.0, double(n), double(n * n)};
      const double sum = w[0] + w[1] + w[2];
      double s_got = 0, s_want = 0;
      for (int i = 0; i < 3; ++i) {
        s_got += std::fabs(got[i] - total * w[i] / sum);
        s_want += std::fabs(want[i] - total * w[i] / sum);
      }
      EXPECT_NEAR(s_got, s_want, 1e-9) << "total " << total << " n " << n;
    }
  }
}

TEST(Store, GrowthPathGolden) {
  const auto path = growth_path(1000, 0.10, 12);
  const std::vector<std::size_t> golden{1000, 1100, 1210, 1331, 1464, 1610, 1771, 1948, 2143, 2357, 2593, 2852, 3137};
  EXPECT_EQ(path, golden);
  EXPECT_EQ(growth_increment(1000, 0.0), 0U);
  EXPECT_EQ(growth_increment(1000, 0.10), 100U);
  EXPECT_EQ(growth_increment(5, 0.10), 1U);  // 0.5 rounds up
}

TEST(Store, SeedDefaults) {
  const auto cat = SchemaCatalog::initial();
  Rng rng(1);
  const auto store = seed_population(ScenarioConfig{}, cat, rng);
  EXPECT_EQ(store.size(), 1000U);
  EXPECT_EQ(store.counts(), (TypeCounts{334, 333, 333}));
  for (const auto& e : store.entities()) {
    EXPECT_EQ(e.version_no, 0U);
    EXPECT_EQ(e.properties, cat.current().of(e.type));
  }
  EXPECT_EQ(store.hot_ids().size() + store.cold_ids().size(), store.size());
}

TEST(Store, NoHotTagsAtZeroFraction) {
  ScenarioConfig c;
  c.pareto_hot_fraction = 0.0;
  Rng rng(2);
  const auto store = seed_population(c, SchemaCatalog::initial(), rng);
  EXPECT_TRUE(store.hot_ids().empty());
}

TEST(Store, HotCountBinomial) {
  const auto cat = SchemaCatalog::initial();
  double total = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(derive_seed(7, seed));
    total += static_cast<double>(seed_population(ScenarioConfig{}, cat, rng).hot_ids().size());
  }
  EXPECT_NEAR(total / 1000.0, 200.0, 12.0);
}

TEST(Store, PartitionsAreExact) {
  Rng rng(3);
  auto cat = SchemaCatalog::initial();
  auto store = seed_population(ScenarioConfig{}, cat, rng);
  grow_population(store, cat, 0.1, 1, 0.2, rng);
  std::vector<EntityId> all;
  for (EntityType t : kEntityTypes) {
    for (EntityId id : store.ids_of(t)) {
      EXPECT_EQ(store.at(id).type, t);
      all.push_back(id);
    }
  }
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), store.size());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);

  std::vector<EntityId> hc(store.hot_ids().begin(), store.hot_ids().end());
  hc.insert(hc.end(), store.cold_ids().begin(), store.cold_ids().end());
  std::sort(hc.begin(), hc.end());
  EXPECT_EQ(hc, all);
  for (EntityId id : store.hot_ids()) EXPECT_TRUE(store.at(id).hot);
  for (EntityId id : store.cold_ids()) EXPECT_FALSE(store.at(id).hot);
}

TEST(Store, GrowthAddsAtCurrentVersion) {
  Rng rng(4);
  auto cat = SchemaCatalog::initial();
  auto store = seed_population(ScenarioConfig{}, cat, rng);
  SchemaVersion v1;
  v1.version_no = 1;
  v1.properties = cat.current().properties;
  cat.append(v1);
  EXPECT_EQ(grow_population(store, cat, 0.10, 1, 0.2, rng), 100U);
  EXPECT_EQ(store.size(), 1100U);
  for (EntityId id = 1000; id < 1100; ++id) EXPECT_EQ(store.at(id).version_no, 1U);
  EXPECT_EQ(grow_population(store, cat, 0.0, 1, 0.2, rng), 0U);
}

TEST(Store, StaleEntities) {
  Rng rng(5);
  auto cat = SchemaCatalog::initial();
  auto store = seed_population(ScenarioConfig{}, cat, rng);
  EXPECT_TRUE(stale_entities(store, EntityType::Mission, 0).empty());
  const auto stale = stale_entities(store, EntityType::Mission, 1);
  const auto ids = store.ids_of(EntityType::Mission);
  EXPECT_EQ(stale, std::vector<EntityId>(ids.begin(), ids.end()));
  EXPECT_TRUE(std::is_sorted(stale.begin(), stale.end()));
  EXPECT_EQ(store.stale_count(1), 1000U);
}

TEST(Store, DeterministicForSeed) {
  const auto cat = SchemaCatalog::initial();
  Rng a(11), b(11);
  const auto s1 = seed_population(ScenarioConfig{}, cat, a);
  const auto s2 = seed_population(ScenarioConfig{}, cat, b);
  ASSERT_EQ(s1.size(), s2.size());
  for (EntityId id = 0; id < s1.size(); ++id) {
    EXPECT_EQ(s1.at(id).hot, s2.at(id).hot);
    EXPECT_EQ(s1.at(id).type, s2.at(id).type);
  }
}
