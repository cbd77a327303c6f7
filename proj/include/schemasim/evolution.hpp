#pragma once

#include <cstdint>

#include "schemasim/costing.hpp"
#include "schemasim/domain.hpp"
#include "schemasim/rng.hpp"
#include "schemasim/store.hpp"

namespace schemasim {

/// Per-entity I/O of migrating one step of an SMO.
struct SmoCostProfile {
  int per_entity_reads = 1;
  int per_entity_writes = 1;
  int extra_dest_reads = 0;  // per destination-type entity
};

SmoCostProfile cost_profile(SmoKind kind) noexcept;

/// {source} for single-type SMOs, {source, dest} for Copy and Move.
TypeSet affected_types(const Smo& smo) noexcept;

/// Draws the SMO of release `release_no`. Multi-type with probability
/// `multi_type_share` (kind, pair and direction uniform), otherwise a uniform
/// single-type kind on a uniform type. The property is uniform over the
/// source's current properties.
///
/// Infeasible draws (Delete or Move on a type with fewer than two properties,
/// Rename or Copy on one with none) are redrawn up to 8 times; a multi-type
/// draw then falls through to the single-type path and a single-type draw to
/// Add.
Smo sample_smo(Rng& rng, double multi_type_share, const SchemaCatalog& catalog, int release_no);

/// Appends the version produced by `smo`. Throws ConsistencyError when the
/// SMO does not fit the current version.
const SchemaVersion& apply_smo_to_catalog(SchemaCatalog& catalog, const Smo& smo);

/// Steps applied by one catch-up and the I/O charged for them.
struct CatchUp {
  std::uint32_t k_single = 0;
  std::uint32_t k_multi_dest = 0;
  std::uint32_t k_multi_src = 0;
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;

  std::uint32_t steps() const noexcept { return k_single + k_multi_dest + k_multi_src; }
  std::uint64_t io() const noexcept { return reads + writes; }
};

/// Brings `entity` to the current version and charges the catch-up to
/// `bucket`. Versions whose SMO does not touch the entity's type are skipped
/// for free.
CatchUp catch_up_entity(Entity& entity, const SchemaCatalog& catalog, IoLedger& ledger, Bucket bucket,
                        CatchUpCharging charging);

/// Newest version whose SMO affected `type` (0 if none did).
std::uint32_t last_affecting_version(const SchemaCatalog& catalog, EntityType type) noexcept;

/// True when the entity has at least one pending step.
bool needs_migration(const Entity& entity, const SchemaCatalog& catalog) noexcept;

/// True when the entity's properties equal the catalog's set for its version.
bool conforms(const Entity& entity, const SchemaCatalog& catalog);

/// Entities of the affected types.
std::size_t affected_entities(const Smo& smo, const TypeCounts& counts) noexcept;

/// Closed-form expectation of affected_entities under sample_smo at the given
/// multi-type share: (1 - c) x mean_t |P_t| + c x mean over the four ordered
/// pairs of |P_a| + |P_b|.
double expected_affected_entities(const TypeCounts& counts, double multi_type_share) noexcept;

}  // namespace schemasim
