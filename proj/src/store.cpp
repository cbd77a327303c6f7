#include "schemasim/store.hpp"

#include <algorithm>
#include <cmath>

namespace schemasim {

TypeCounts allocate_population(std::size_t total, std::int64_t cardinality_n) {
  const auto n = static_cast<unsigned __int128>(std::max<std::int64_t>(cardinality_n, 1));
  const std::array<unsigned __int128, kEntityTypeCount> weight{1, n, n * n};
  const unsigned __int128 weight_sum = weight[0] + weight[1] + weight[2];

  TypeCounts counts{};
  std::array<unsigned __int128, kEntityTypeCount> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < kEntityTypeCount; ++i) {
    const unsigned __int128 scaled = static_cast<unsigned __int128>(total) * weight[i];
    counts[i] = static_cast<std::size_t>(scaled / weight_sum);
    remainder[i] = scaled % weight_sum;
    assigned += counts[i];
  }

  std::array<std::size_t, kEntityTypeCount> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++counts[order[k]];
  return counts;
}

std::size_t growth_increment(std::size_t population, double rate) {
  if (!(rate > 0.0)) return 0;
  return static_cast<std::size_t>(std::floor(rate * static_cast<double>(population) + 0.5));
}

std::vector<std::size_t> growth_path(std::size_t initial, double rate, std::size_t releases) {
  std::vector<std::size_t> path{initial};
  for (std::size_t r = 0; r < releases; ++r) path.push_back(path.back() + growth_increment(path.back(), rate));
  return path;
}

EntityId EntityStore::create(EntityType type, const SchemaCatalog& catalog, bool hot) {
  const auto id = static_cast<EntityId>(entities_.size());
  entities_.push_back(Entity{id, type, catalog.current_version(), catalog.current().of(type), hot});
  by_type_[index_of(type)].push_back(id);
  (hot ? hot_ : cold_).push_back(id);
  return id;
}

TypeCounts EntityStore::counts() const noexcept {
  return {by_type_[0].size(), by_type_[1].size(), by_type_[2].size()};
}

std::size_t EntityStore::stale_count(std::uint32_t current_version) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      entities_.begin(), entities_.end(), [&](const Entity& e) { return e.version_no < current_version; }));
}

namespace {

void add_entities(EntityStore& store, const SchemaCatalog& catalog, std::size_t total,
                  std::int64_t cardinality_n, double hot_fraction, Rng& rng) {
  const TypeCounts counts = allocate_population(total, cardinality_n);
  for (EntityType t : kEntityTypes) {
    for (std::size_t i = 0; i < counts[index_of(t)]; ++i) {
      store.create(t, catalog, rng.bernoulli(hot_fraction));
    }
  }
}

}  // namespace

EntityStore seed_population(const ScenarioConfig& config, const SchemaCatalog& catalog, Rng& rng) {
  EntityStore store;
  add_entities(store, catalog, static_cast<std::size_t>(std::max<std::int64_t>(config.initial_entities, 0)),
               config.cardinality_n, config.pareto_hot_fraction, rng);
  return store;
}

std::size_t grow_population(EntityStore& store, const SchemaCatalog& catalog, double growth_rate,
                            std::int64_t cardinality_n, double hot_fraction, Rng& rng) {
  const std::size_t added = growth_increment(store.size(), growth_rate);
  add_entities(store, catalog, added, cardinality_n, hot_fraction, rng);
  return added;
}

std::vector<EntityId> stale_entities(const EntityStore& store, EntityType type,
                                     std::uint32_t current_version) {
  std::vector<EntityId> out;
  for (EntityId id : store.ids_of(type)) {
    if (store.at(id).version_no < current_version) out.push_back(id);
  }
  return out;
}

}  // namespace schemasim
