#include "schemasim/domain.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace schemasim {

std::string_view to_string(EntityType t) noexcept {
  switch (t) {
    case EntityType::Player: return "player";
    case EntityType::Mission: return "mission";
    case EntityType::Place: return "place";
  }
  return "?";
}

std::optional<EntityType> parse_entity_type(std::string_view text) noexcept {
  for (EntityType t : kEntityTypes) {
    if (text == to_string(t)) return t;
  }
  return std::nullopt;
}

std::string_view to_string(SmoKind k) noexcept {
  switch (k) {
    case SmoKind::Add: return "add";
    case SmoKind::Delete: return "delete";
    case SmoKind::Rename: return "rename";
    case SmoKind::Copy: return "copy";
    case SmoKind::Move: return "move";
  }
  return "?";
}

std::optional<SmoKind> parse_smo_kind(std::string_view text) noexcept {
  for (SmoKind k : {SmoKind::Add, SmoKind::Delete, SmoKind::Rename, SmoKind::Copy, SmoKind::Move}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

bool is_valid_multi_type_pair(EntityType source, EntityType dest) noexcept {
  const auto a = index_of(source);
  const auto b = index_of(dest);
  // Player(0)-Mission(1) and Mission(1)-Place(2): adjacent indices only.
  return (a > b ? a - b : b - a) == 1;
}

std::string Smo::describe() const {
  std::string out{to_string(kind)};
  out += ' ';
  out += to_string(source);
  out += '.';
  out += property;
  if (dest) {
    out += " -> ";
    out += to_string(*dest);
  }
  if (new_property) {
    out += dest ? "." : " -> ";
    out += *new_property;
  }
  return out;
}

std::vector<std::string> smo_problems(const Smo& smo) {
  std::vector<std::string> problems;
  if (smo.release_no < 1) problems.emplace_back("release_no must be >= 1");
  if (smo.multi_type()) {
    if (!smo.dest) {
      problems.emplace_back("multi-type SMO without destination type");
    } else if (!is_valid_multi_type_pair(smo.source, *smo.dest)) {
      problems.emplace_back("multi-type SMO on an unrelated type pair");
    }
    if (!smo.new_property) problems.emplace_back("copy/move without destination property name");
  } else if (smo.dest) {
    problems.emplace_back("single-type SMO with a destination type");
  }
  if (smo.property.empty()) problems.emplace_back("empty property name");
  if (smo.kind == SmoKind::Rename && !smo.new_property) problems.emplace_back("rename without new name");
  return problems;
}

bool apply_edit(PropertySet& set, const PropertyEdit& edit) {
  if (edit.remove) {
    auto it = std::lower_bound(set.begin(), set.end(), *edit.remove);
    if (it == set.end() || *it != *edit.remove) return false;
    set.erase(it);
  }
  if (edit.insert) {
    auto it = std::lower_bound(set.begin(), set.end(), *edit.insert);
    if (it != set.end() && *it == *edit.insert) return false;
    set.insert(it, *edit.insert);
  }
  return true;
}

SchemaCatalog SchemaCatalog::initial(std::size_t properties_per_type) {
  std::array<std::vector<std::string>, kEntityTypeCount> names;
  for (auto& list : names) {
    for (std::size_t i = 0; i < properties_per_type; ++i) list.push_back("p" + std::to_string(i));
  }
  return SchemaCatalog(names);
}

SchemaCatalog::SchemaCatalog(const std::array<std::vector<std::string>, kEntityTypeCount>& names) {
  SchemaVersion v0;
  for (EntityType t : kEntityTypes) {
    auto& set = v0.properties[index_of(t)];
    for (const auto& name : names[index_of(t)]) set.push_back(intern(name));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  versions_.push_back(std::move(v0));
}

PropertyId SchemaCatalog::intern(std::string_view name) {
  std::string key{name};
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<PropertyId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<PropertyId> SchemaCatalog::find(std::string_view name) const {
  if (auto it = ids_.find(std::string{name}); it != ids_.end()) return it->second;
  return std::nullopt;
}

bool SchemaCatalog::has_property(EntityType t, std::string_view name) const {
  const auto id = find(name);
  if (!id) return false;
  const auto& set = current().of(t);
  return std::binary_search(set.begin(), set.end(), *id);
}

std::vector<std::string> SchemaCatalog::property_names(EntityType t) const {
  return property_names(t, current_version());
}

std::vector<std::string> SchemaCatalog::property_names(EntityType t, std::uint32_t version_no) const {
  std::vector<std::string> out;
  for (PropertyId id : version(version_no).of(t)) out.push_back(names_[id]);
  std::sort(out.begin(), out.end());
  return out;
}

const SchemaVersion& SchemaCatalog::append(SchemaVersion next) {
  if (next.version_no != current_version() + 1) {
    throw ConsistencyError(fmt::format("schema version {} appended after {}", next.version_no,
                                       current_version()));
  }
  versions_.push_back(std::move(next));
  return versions_.back();
}

std::string_view to_string(Distribution d) noexcept {
  return d == Distribution::Uniform ? "uniform" : "pareto";
}

std::optional<Distribution> parse_distribution(std::string_view text) noexcept {
  if (text == "uniform") return Distribution::Uniform;
  if (text == "pareto") return Distribution::Pareto;
  return std::nullopt;
}

std::string_view to_string(CatchUpCharging c) noexcept {
  return c == CatchUpCharging::PerStep ? "per_step" : "batch";
}

std::optional<CatchUpCharging> parse_catchup_charging(std::string_view text) noexcept {
  if (text == "per_step") return CatchUpCharging::PerStep;
  if (text == "batch") return CatchUpCharging::Batch;
  return std::nullopt;
}

std::int64_t ScenarioConfig::accesses_per_release() const noexcept {
  const double per_execution = std::floor(access_fraction * static_cast<double>(initial_entities) + 0.5);
  return workload_executions * static_cast<std::int64_t>(per_execution);
}

bool ScenarioConfig::in_incremental_schedule(std::int64_t release_no) const noexcept {
  return std::find(incremental_schedule.begin(), incremental_schedule.end(), release_no) !=
         incremental_schedule.end();
}

namespace {

void check_fraction(std::vector<Violation>& out, std::string_view field, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    out.push_back({std::string{field}, fmt::format("must lie in [0, 1], got {}", value)});
  }
}

void check_count(std::vector<Violation>& out, std::string_view field, std::int64_t value) {
  if (value < 0) out.push_back({std::string{field}, fmt::format("must be >= 0, got {}", value)});
}

void check_non_negative(std::vector<Violation>& out, std::string_view field, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    out.push_back({std::string{field}, fmt::format("must be finite and >= 0, got {}", value)});
  }
}

}  // namespace

std::vector<Violation> validate_config(const ScenarioConfig& c, bool strict_grid) {
  std::vector<Violation> out;

  check_count(out, "initial_entities", c.initial_entities);
  check_count(out, "scale_factor", c.scale_factor);
  check_fraction(out, "growth_rate", c.growth_rate);
  if (c.cardinality_n < 1) {
    out.push_back({"cardinality_n", fmt::format("must be >= 1, got {}", c.cardinality_n)});
  }
  if (c.properties_per_type < 1) {
    out.push_back({"properties_per_type", "every type needs at least one property at version 0"});
  }

  check_fraction(out, "pareto_hot_fraction", c.pareto_hot_fraction);
  check_fraction(out, "hot_access_share", c.hot_access_share);
  check_count(out, "workload_executions", c.workload_executions);
  check_fraction(out, "access_fraction", c.access_fraction);
  if (!(c.player_access_weight > 0.0) || !std::isfinite(c.player_access_weight)) {
    out.push_back({"player_access_weight", "must be finite and > 0"});
  }

  if (c.releases < 1) out.push_back({"releases", fmt::format("must be >= 1, got {}", c.releases)});
  check_fraction(out, "multi_type_share", c.multi_type_share);

  check_non_negative(out, "price_per_million_io", c.price_per_million_io);
  check_non_negative(out, "latency_base_ms", c.latency_base_ms);
  check_non_negative(out, "latency_single_ms", c.latency_single_ms);
  check_non_negative(out, "latency_multi_ms", c.latency_multi_ms);
  check_non_negative(out, "latency_jitter_ms", c.latency_jitter_ms);

  for (std::int64_t r : c.incremental_schedule) {
    if (r < 1 || r > c.releases) {
      out.push_back({"incremental_schedule", fmt::format("release {} outside 1..{}", r, c.releases)});
    }
  }
  check_fraction(out, "prediction_fraction", c.prediction_fraction);
  if (!(c.smoothing_alpha > 0.0 && c.smoothing_alpha <= 1.0)) {
    out.push_back({"smoothing_alpha", fmt::format("must lie in (0, 1], got {}", c.smoothing_alpha)});
  }
  if (c.runs && *c.runs < 1) out.push_back({"runs", fmt::format("must be >= 1, got {}", *c.runs)});

  if (strict_grid) {
    static constexpr std::array<double, 5> kShares{0.0, 0.25, 0.5, 0.75, 1.0};
    if (std::find(kShares.begin(), kShares.end(), c.multi_type_share) == kShares.end()) {
      out.push_back({"multi_type_share", "not on the grid {0, 0.25, 0.5, 0.75, 1}"});
    }
    if (c.workload_executions != 1 && c.workload_executions != 2 && c.workload_executions != 4) {
      out.push_back({"workload_executions", "not on the grid {1, 2, 4}"});
    }
    if (c.cardinality_n != 1 && c.cardinality_n != 10 && c.cardinality_n != 25) {
      out.push_back({"cardinality_n", "not on the grid {1, 10, 25}"});
    }
  }
  return out;
}

}  // namespace schemasim
