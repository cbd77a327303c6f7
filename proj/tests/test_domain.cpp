#include <gtest/gtest.h>

#include "schemasim/domain.hpp"

using namespace schemasim;

namespace {

bool names(const std::vector<Violation>& v, const std::string& field) {
  for (const auto& x : v) {
    if (x.field == field) return true;
  }
  return false;
}

}  // namespace

TEST(Domain, EntityTypeOrderAndNames) {
  EXPECT_LT(index_of(EntityType::Player), index_of(EntityType::Mission));
  EXPECT_LT(index_of(EntityType::Mission), index_of(EntityType::Place));
  for (EntityType t : kEntityTypes) EXPECT_EQ(parse_entity_type(to_string(t)), t);
  EXPECT_FALSE(parse_entity_type("planet").has_value());
}

TEST(Domain, TypeSet) {
  TypeSet s{EntityType::Mission};
  EXPECT_TRUE(s.contains(EntityType::Mission));
  EXPECT_FALSE(s.contains(EntityType::Place));
  s.insert(EntityType::Place);
  EXPECT_EQ(s.size(), 2U);
  EXPECT_TRUE(TypeSet{}.empty());
}

TEST(Domain, MultiTypePairs) {
  EXPECT_TRUE(is_valid_multi_type_pair(EntityType::Player, EntityType::Mission));
  EXPECT_TRUE(is_valid_multi_type_pair(EntityType::Mission, EntityType::Player));
  EXPECT_TRUE(is_valid_multi_type_pair(EntityType::Place, EntityType::Mission));
  EXPECT_FALSE(is_valid_multi_type_pair(EntityType::Player, EntityType::Place));
  EXPECT_FALSE(is_valid_multi_type_pair(EntityType::Mission, EntityType::Mission));
}

TEST(Domain, SmoProblems) {
  Smo ok{SmoKind::Move, EntityType::Mission, EntityType::Place, "p3", "p3_r1", 1};
  EXPECT_TRUE(smo_problems(ok).empty());

  Smo bad_pair = ok;
  bad_pair.source = EntityType::Player;
  EXPECT_FALSE(smo_problems(bad_pair).empty());

  Smo single_with_dest{SmoKind::Add, EntityType::Place, EntityType::Mission, "x", std::nullopt, 1};
  EXPECT_FALSE(smo_problems(single_with_dest).empty());

  Smo rename_without_name{SmoKind::Rename, EntityType::Place, std::nullopt, "p1", std::nullopt, 1};
  EXPECT_FALSE(smo_problems(rename_without_name).empty());
}

TEST(Domain, InitialCatalog) {
  const auto cat = SchemaCatalog::initial();
  EXPECT_EQ(cat.current_version(), 0U);
  EXPECT_EQ(cat.versions().size(), 1U);
  for (EntityType t : kEntityTypes) {
    EXPECT_EQ(cat.current().of(t).size(), 10U);
    EXPECT_TRUE(cat.has_property(t, "p0"));
    EXPECT_TRUE(cat.has_property(t, "p9"));
  }
  EXPECT_FALSE(cat.current().producing_smo.has_value());
}

TEST(Domain, CatalogRejectsGaps) {
  auto cat = SchemaCatalog::initial(2);
  SchemaVersion v;
  v.version_no = 2;
  EXPECT_THROW(cat.append(v), ConsistencyError);
  v.version_no = 1;
  v.properties = cat.current().properties;
  EXPECT_NO_THROW(cat.append(v));
  EXPECT_EQ(cat.current_version(), 1U);
}

TEST(Domain, ApplyEdit) {
  PropertySet s{1, 3, 5};
  EXPECT_TRUE(apply_edit(s, PropertyEdit{3, 4}));
  EXPECT_EQ(s, (PropertySet{1, 4, 5}));
  EXPECT_FALSE(apply_edit(s, PropertyEdit{3, std::nullopt}));
  PropertySet t{1};
  EXPECT_FALSE(apply_edit(t, PropertyEdit{std::nullopt, 1}));
}

TEST(Domain, DefaultsAreValid) { EXPECT_TRUE(validate_config(ScenarioConfig{}).empty()); }

TEST(Domain, DefaultsAreOnTheGrid) { EXPECT_TRUE(validate_config(ScenarioConfig{}, true).empty()); }

TEST(Domain, NegativeGrowthRate) {
  ScenarioConfig c;
  c.growth_rate = -0.1;
  const auto v = validate_config(c);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].field, "growth_rate");
}

TEST(Domain, OffGridShareOnlyFailsStrict) {
  ScenarioConfig c;
  c.multi_type_share = 0.3;
  EXPECT_TRUE(validate_config(c).empty());
  const auto v = validate_config(c, true);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].field, "multi_type_share");
}

TEST(Domain, OtherViolations) {
  ScenarioConfig c;
  c.releases = 0;
  c.latency_base_ms = -1.0;
  c.smoothing_alpha = 0.0;
  c.incremental_schedule = {0};
  c.initial_entities = -5;
  c.runs = 0;
  const auto v = validate_config(c);
  EXPECT_TRUE(names(v, "releases"));
  EXPECT_TRUE(names(v, "latency_base_ms"));
  EXPECT_TRUE(names(v, "smoothing_alpha"));
  EXPECT_TRUE(names(v, "incremental_schedule"));
  EXPECT_TRUE(names(v, "initial_entities"));
  EXPECT_TRUE(names(v, "runs"));
}

TEST(Domain, EffectiveRuns) {
  ScenarioConfig c;
  EXPECT_EQ(c.effective_runs(), 40);
  c.cardinality_n = 25;
  EXPECT_EQ(c.effective_runs(), 80);
  c.runs = 3;
  EXPECT_EQ(c.effective_runs(), 3);
}

TEST(Domain, AccessesPerRelease) {
  ScenarioConfig c;
  EXPECT_EQ(c.accesses_per_release(), 200);
  c.workload_executions = 0;
  EXPECT_EQ(c.accesses_per_release(), 0);
}
