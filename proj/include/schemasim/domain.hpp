#pragma once

// Vocabulary types shared by every module: entity types, schema modification
// operations (SMOs), schema versions, entities and the scenario configuration.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace schemasim {

/// Raised when the simulator detects a broken internal invariant (a generator
/// or bookkeeping bug, never a user error).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class EntityType : std::uint8_t { Player = 0, Mission = 1, Place = 2 };

inline constexpr std::size_t kEntityTypeCount = 3;
inline constexpr std::array<EntityType, kEntityTypeCount> kEntityTypes{
    EntityType::Player, EntityType::Mission, EntityType::Place};

constexpr std::size_t index_of(EntityType t) noexcept { return static_cast<std::size_t>(t); }

std::string_view to_string(EntityType t) noexcept;
std::optional<EntityType> parse_entity_type(std::string_view text) noexcept;

/// Small set of entity types (a 3-bit mask).
class TypeSet {
 public:
  constexpr TypeSet() = default;
  constexpr TypeSet(std::initializer_list<EntityType> types) {
    for (EntityType t : types) insert(t);
  }

  constexpr void insert(EntityType t) noexcept { bits_ |= bit(t); }
  constexpr bool contains(EntityType t) const noexcept { return (bits_ & bit(t)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return ((bits_ >> 0) & 1U) + ((bits_ >> 1) & 1U) + ((bits_ >> 2) & 1U);
  }

  friend constexpr bool operator==(TypeSet, TypeSet) = default;

 private:
  static constexpr std::uint8_t bit(EntityType t) noexcept {
    return static_cast<std::uint8_t>(1U << index_of(t));
  }
  std::uint8_t bits_ = 0;
};

enum class SmoKind : std::uint8_t { Add, Delete, Rename, Copy, Move };

constexpr bool is_multi_type(SmoKind k) noexcept { return k == SmoKind::Copy || k == SmoKind::Move; }

std::string_view to_string(SmoKind k) noexcept;
std::optional<SmoKind> parse_smo_kind(std::string_view text) noexcept;

/// Multi-type SMOs only relate Player-Mission and Mission-Place, either direction.
bool is_valid_multi_type_pair(EntityType source, EntityType dest) noexcept;

struct Smo {
  SmoKind kind = SmoKind::Add;
  EntityType source = EntityType::Player;
  std::optional<EntityType> dest;  // present iff multi-type
  std::string property;
  std::optional<std::string> new_property;  // Rename/Copy/Move target name
  int release_no = 1;

  bool multi_type() const noexcept { return is_multi_type(kind); }
  std::string describe() const;

  friend bool operator==(const Smo&, const Smo&) = default;
};

/// Structural well-formedness (kind/type pairing, names present). Empty when valid.
std::vector<std::string> smo_problems(const Smo& smo);

using PropertyId = std::uint32_t;
/// Sorted, duplicate-free list of interned property names.
using PropertySet = std::vector<PropertyId>;

/// How one schema version changes the property set of one entity type.
struct PropertyEdit {
  std::optional<PropertyId> remove;
  std::optional<PropertyId> insert;
};

struct SchemaVersion {
  std::uint32_t version_no = 0;
  std::array<PropertySet, kEntityTypeCount> properties;
  std::optional<Smo> producing_smo;  // absent for version 0

  // Resolved form of producing_smo used to replay the step on entities.
  TypeSet affected;
  std::array<PropertyEdit, kEntityTypeCount> edits;

  const PropertySet& of(EntityType t) const noexcept { return properties[index_of(t)]; }
};

/// Applies `edit` to a sorted property set. Returns false when the edit does
/// not fit the set (removing an absent name or inserting a present one).
bool apply_edit(PropertySet& set, const PropertyEdit& edit);

/// Ordered schema history. versions()[i].version_no == i always holds.
class SchemaCatalog {
 public:
  /// Version 0 with `properties_per_type` synthetic names p0..p{n-1} per type.
  static SchemaCatalog initial(std::size_t properties_per_type = 10);

  /// Version 0 from explicit property names, indexed by EntityType.
  explicit SchemaCatalog(const std::array<std::vector<std::string>, kEntityTypeCount>& names);

  const SchemaVersion& current() const noexcept { return versions_.back(); }
  std::uint32_t current_version() const noexcept { return current().version_no; }
  const SchemaVersion& version(std::uint32_t no) const { return versions_.at(no); }
  std::span<const SchemaVersion> versions() const noexcept { return versions_; }

  PropertyId intern(std::string_view name);
  std::optional<PropertyId> find(std::string_view name) const;
  const std::string& name_of(PropertyId id) const { return names_.at(id); }

  bool has_property(EntityType t, std::string_view name) const;
  /// Property names of `t` at the current version, sorted lexicographically.
  std::vector<std::string> property_names(EntityType t) const;
  std::vector<std::string> property_names(EntityType t, std::uint32_t version_no) const;

  /// Appends the next version. Throws ConsistencyError unless
  /// next.version_no == current_version() + 1.
  const SchemaVersion& append(SchemaVersion next);

 private:
  SchemaCatalog() = default;

  std::vector<SchemaVersion> versions_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, PropertyId> ids_;
};

using EntityId = std::uint64_t;

struct Entity {
  EntityId id = 0;
  EntityType type = EntityType::Player;
  std::uint32_t version_no = 0;
  PropertySet properties;
  bool hot = false;
};

enum class Distribution : std::uint8_t { Uniform, Pareto };
std::string_view to_string(Distribution d) noexcept;
std::optional<Distribution> parse_distribution(std::string_view text) noexcept;

/// How on-the-fly and release-time catch-ups are charged.
///  PerStep: 1 read + 1 write per pending step affecting the entity's type.
///  Batch:   1 read + 1 write for the whole catch-up.
/// Both add 1 read per pending multi-type step in which the entity's type is
/// the destination.
enum class CatchUpCharging : std::uint8_t { PerStep, Batch };
std::string_view to_string(CatchUpCharging c) noexcept;
std::optional<CatchUpCharging> parse_catchup_charging(std::string_view text) noexcept;

struct ScenarioConfig {
  // data set
  std::int64_t initial_entities = 1000;
  std::int64_t scale_factor = 10000;
  double growth_rate = 0.10;
  std::int64_t cardinality_n = 1;
  std::int64_t properties_per_type = 10;

  // workload
  Distribution distribution = Distribution::Pareto;
  double pareto_hot_fraction = 0.20;
  double hot_access_share = 0.80;
  std::int64_t workload_executions = 2;
  double access_fraction = 0.10;
  double player_access_weight = 1.0;  // 1 = no Player boost

  // schema evolution
  std::int64_t releases = 12;
  double multi_type_share = 0.25;

  // pricing and latency model
  double price_per_million_io = 0.2;
  double latency_base_ms = 4.2;
  double latency_single_ms = 1.3;
  double latency_multi_ms = 2.6;
  double latency_jitter_ms = 0.0;
  CatchUpCharging catchup_charging = CatchUpCharging::PerStep;

  // strategy settings
  std::vector<std::int64_t> incremental_schedule{5, 10};
  double prediction_fraction = 0.30;
  double smoothing_alpha = 0.5;

  // Monte Carlo
  std::uint64_t master_seed = 42;
  std::optional<std::int64_t> runs;  // unset: 40, or 80 when cardinality_n > 1

  std::int64_t effective_runs() const noexcept {
    return runs.value_or(cardinality_n > 1 ? 80 : 40);
  }
  /// Accesses per release: executions x round(access_fraction x initial_entities).
  std::int64_t accesses_per_release() const noexcept;
  bool in_incremental_schedule(std::int64_t release_no) const noexcept;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct Violation {
  std::string field;
  std::string reason;
};

/// Every violated config invariant, empty when valid. With `strict_grid`
/// multi_type_share, workload_executions and cardinality_n must also lie on
/// the experiment grid.
std::vector<Violation> validate_config(const ScenarioConfig& config, bool strict_grid = false);

}  // namespace schemasim
