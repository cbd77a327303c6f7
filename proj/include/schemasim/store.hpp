#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "schemasim/domain.hpp"
#include "schemasim/rng.hpp"

namespace schemasim {

/// Entity counts indexed by EntityType.
using TypeCounts = std::array<std::size_t, kEntityTypeCount>;

/// Splits `total` over Player:Mission:Place in the ratio 1 : n : n^2 by
/// largest-remainder apportionment. Ties on the remainder go to the earlier
/// type, so for n = 1 a single leftover entity lands on Player.
TypeCounts allocate_population(std::size_t total, std::int64_t cardinality_n);

/// round-half-up(rate x population).
std::size_t growth_increment(std::size_t population, double rate);

/// Population before release 1 followed by the population after each release.
std::vector<std::size_t> growth_path(std::size_t initial, double rate, std::size_t releases);

/// In-memory entity population. Ids are dense: the entity with id i is the
/// i-th entity ever created, so ids double as indices.
class EntityStore {
 public:
  /// Creates an entity conforming to the catalog's current version.
  EntityId create(EntityType type, const SchemaCatalog& catalog, bool hot);

  std::size_t size() const noexcept { return entities_.size(); }
  bool empty() const noexcept { return entities_.empty(); }

  const Entity& at(EntityId id) const { return entities_.at(id); }
  Entity& at(EntityId id) { return entities_.at(id); }

  std::span<const Entity> entities() const noexcept { return entities_; }
  std::span<Entity> entities() noexcept { return entities_; }

  std::span<const EntityId> ids_of(EntityType t) const noexcept { return by_type_[index_of(t)]; }
  std::span<const EntityId> hot_ids() const noexcept { return hot_; }
  std::span<const EntityId> cold_ids() const noexcept { return cold_; }

  TypeCounts counts() const noexcept;
  std::size_t stale_count(std::uint32_t current_version) const noexcept;

 private:
  std::vector<Entity> entities_;
  std::array<std::vector<EntityId>, kEntityTypeCount> by_type_;
  std::vector<EntityId> hot_;
  std::vector<EntityId> cold_;
};

/// `config.initial_entities` entities at version 0, apportioned over the types;
/// each is tagged hot with probability pareto_hot_fraction.
EntityStore seed_population(const ScenarioConfig& config, const SchemaCatalog& catalog, Rng& rng);

/// Adds growth_increment(store.size(), growth_rate) entities at the catalog's
/// current version, apportioned like the initial population. Returns the count.
std::size_t grow_population(EntityStore& store, const SchemaCatalog& catalog, double growth_rate,
                            std::int64_t cardinality_n, double hot_fraction, Rng& rng);

/// Ids of `type` lagging behind `current_version`, ascending.
std::vector<EntityId> stale_entities(const EntityStore& store, EntityType type,
                                     std::uint32_t current_version);

}  // namespace schemasim
