#include "schemasim/evolution.hpp"

#include <fmt/format.h>

namespace schemasim {

namespace {

constexpr int kMaxRedraws = 8;

constexpr std::array<std::pair<EntityType, EntityType>, 2> kPairs{{
    {EntityType::Player, EntityType::Mission},
    {EntityType::Mission, EntityType::Place},
}};

std::size_t min_properties(SmoKind kind) noexcept {
  switch (kind) {
    case SmoKind::Add: return 0;
    case SmoKind::Rename:
    case SmoKind::Copy: return 1;
    case SmoKind::Delete:
    case SmoKind::Move: return 2;
  }
  return 0;
}

std::string renamed(const std::string& property, int release_no) {
  return fmt::format("{}_r{}", property, release_no);
}

std::optional<Smo> draw_multi(Rng& rng, const SchemaCatalog& catalog, int release_no) {
  Smo smo;
  smo.kind = rng.below(2) == 0 ? SmoKind::Copy : SmoKind::Move;
  auto [a, b] = kPairs[rng.below(2)];
  if (rng.below(2) == 1) std::swap(a, b);
  smo.source = a;
  smo.dest = b;
  smo.release_no = release_no;
  const auto& props = catalog.current().of(a);
  if (props.size() < min_properties(smo.kind)) return std::nullopt;
  smo.property = catalog.name_of(props[rng.below(props.size())]);
  smo.new_property = renamed(smo.property, release_no);
  return smo;
}

std::optional<Smo> draw_single(Rng& rng, const SchemaCatalog& catalog, int release_no) {
  static constexpr std::array<SmoKind, 3> kKinds{SmoKind::Add, SmoKind::Delete, SmoKind::Rename};
  Smo smo;
  smo.kind = kKinds[rng.below(3)];
  smo.source = kEntityTypes[rng.below(3)];
  smo.release_no = release_no;
  if (smo.kind == SmoKind::Add) {
    smo.property = fmt::format("added_r{}", release_no);
    return smo;
  }
  const auto& props = catalog.current().of(smo.source);
  if (props.size() < min_properties(smo.kind)) return std::nullopt;
  smo.property = catalog.name_of(props[rng.below(props.size())]);
  if (smo.kind == SmoKind::Rename) smo.new_property = renamed(smo.property, release_no);
  return smo;
}

}  // namespace

SmoCostProfile cost_profile(SmoKind kind) noexcept {
  return is_multi_type(kind) ? SmoCostProfile{1, 1, 1} : SmoCostProfile{1, 1, 0};
}

TypeSet affected_types(const Smo& smo) noexcept {
  TypeSet s{smo.source};
  if (smo.multi_type() && smo.dest) s.insert(*smo.dest);
  return s;
}

Smo sample_smo(Rng& rng, double multi_type_share, const SchemaCatalog& catalog, int release_no) {
  if (rng.uniform() < multi_type_share) {
    for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
      if (auto smo = draw_multi(rng, catalog, release_no)) return *smo;
    }
  }
  for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    if (auto smo = draw_single(rng, catalog, release_no)) return *smo;
  }
  Smo add;
  add.kind = SmoKind::Add;
  add.source = kEntityTypes[rng.below(3)];
  add.property = fmt::format("added_r{}", release_no);
  add.release_no = release_no;
  return add;
}

const SchemaVersion& apply_smo_to_catalog(SchemaCatalog& catalog, const Smo& smo) {
  if (auto problems = smo_problems(smo); !problems.empty()) {
    throw ConsistencyError(fmt::format("malformed SMO '{}': {}", smo.describe(), problems.front()));
  }
  SchemaVersion next;
  next.version_no = catalog.current_version() + 1;
  next.properties = catalog.current().properties;
  next.producing_smo = smo;
  next.affected = affected_types(smo);

  const auto src = index_of(smo.source);
  auto existing = [&](const std::string& name) {
    const auto id = catalog.find(name);
    if (!id || !catalog.has_property(smo.source, name)) {
      throw ConsistencyError(fmt::format("'{}' needs {}.{} which does not exist", smo.describe(),
                                         to_string(smo.source), name));
    }
    return *id;
  };

  switch (smo.kind) {
    case SmoKind::Add:
      next.edits[src].insert = catalog.intern(smo.property);
      break;
    case SmoKind::Delete:
      next.edits[src].remove = existing(smo.property);
      break;
    case SmoKind::Rename: {
      const auto old_id = existing(smo.property);
      next.edits[src].remove = old_id;
      next.edits[src].insert = catalog.intern(*smo.new_property);
      break;
    }
    case SmoKind::Copy:
    case SmoKind::Move: {
      const auto old_id = existing(smo.property);
      if (smo.kind == SmoKind::Move) next.edits[src].remove = old_id;
      next.edits[index_of(*smo.dest)].insert = catalog.intern(*smo.new_property);
      break;
    }
  }

  for (EntityType t : kEntityTypes) {
    auto& set = next.properties[index_of(t)];
    if (!apply_edit(set, next.edits[index_of(t)])) {
      throw ConsistencyError(fmt::format("'{}' does not fit the {} schema", smo.describe(), to_string(t)));
    }
    if (set.empty()) {
      throw ConsistencyError(fmt::format("'{}' leaves {} without properties", smo.describe(), to_string(t)));
    }
  }
  return catalog.append(std::move(next));
}

CatchUp catch_up_entity(Entity& entity, const SchemaCatalog& catalog, IoLedger& ledger, Bucket bucket,
                        CatchUpCharging charging) {
  CatchUp c;
  const std::uint32_t current = catalog.current_version();
  if (entity.version_no > current) {
    throw ConsistencyError(fmt::format("entity {} is ahead of the catalog", entity.id));
  }
  const auto t = index_of(entity.type);
  for (std::uint32_t v = entity.version_no + 1; v <= current; ++v) {
    const SchemaVersion& step = catalog.version(v);
    if (!step.affected.contains(entity.type)) continue;
    if (!apply_edit(entity.properties, step.edits[t])) {
      throw ConsistencyError(fmt::format("entity {} cannot replay version {}", entity.id, v));
    }
    const Smo& smo = *step.producing_smo;
    if (!smo.multi_type()) {
      ++c.k_single;
    } else if (smo.dest == entity.type) {
      ++c.k_multi_dest;
    } else {
      ++c.k_multi_src;
    }
  }
  entity.version_no = current;

  if (c.steps() > 0) {
    const std::uint64_t rw = charging == CatchUpCharging::PerStep ? c.steps() : 1;
    c.reads = rw + c.k_multi_dest;
    c.writes = rw;
    ledger.charge(bucket, c.reads, c.writes);
  }
  return c;
}

std::uint32_t last_affecting_version(const SchemaCatalog& catalog, EntityType type) noexcept {
  const auto versions = catalog.versions();
  for (std::size_t v = versions.size(); v-- > 1;) {
    if (versions[v].affected.contains(type)) return static_cast<std::uint32_t>(v);
  }
  return 0;
}

bool needs_migration(const Entity& entity, const SchemaCatalog& catalog) noexcept {
  return entity.version_no < last_affecting_version(catalog, entity.type);
}

bool conforms(const Entity& entity, const SchemaCatalog& catalog) {
  if (entity.version_no > catalog.current_version()) return false;
  return entity.properties == catalog.version(entity.version_no).of(entity.type);
}

std::size_t affected_entities(const Smo& smo, const TypeCounts& counts) noexcept {
  std::size_t total = 0;
  const TypeSet affected = affected_types(smo);
  for (EntityType t : kEntityTypes) {
    if (affected.contains(t)) total += counts[index_of(t)];
  }
  return total;
}

double expected_affected_entities(const TypeCounts& counts, double multi_type_share) noexcept {
  const double player = static_cast<double>(counts[0]);
  const double mission = static_cast<double>(counts[1]);
  const double place = static_cast<double>(counts[2]);
  const double single = (player + mission + place) / 3.0;
  // Both directions of a pair touch the same two types.
  const double multi = ((player + mission) + (mission + place)) / 2.0;
  return (1.0 - multi_type_share) * single + multi_type_share * multi;
}

}  // namespace schemasim
