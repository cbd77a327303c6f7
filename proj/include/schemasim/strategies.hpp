#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string_view>

#include "schemasim/evolution.hpp"
#include "schemasim/run_state.hpp"

namespace schemasim {

enum class StrategyKind : std::uint8_t { Eager, Incremental, Predictive, Lazy };

inline constexpr std::array<StrategyKind, 4> kAllStrategies{
    StrategyKind::Eager, StrategyKind::Incremental, StrategyKind::Predictive, StrategyKind::Lazy};

std::string_view to_string(StrategyKind k) noexcept;
std::optional<StrategyKind> parse_strategy(std::string_view text) noexcept;

/// A migration policy. Policies hold no state and draw no randomness; all
/// strategies of one run index therefore see identical SMO and access streams.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual StrategyKind kind() const noexcept = 0;

  /// Called for every workload access. The default catches a stale entity up
  /// on the fly and charges it on-read.
  virtual CatchUp on_access(RunState& state, EntityId id) const;

  /// Called once per release after the catalog has advanced.
  virtual void on_release(RunState& state, int release_no) const = 0;
};

std::unique_ptr<Strategy> make_strategy(StrategyKind kind);

/// Catches up every entity; affected ones are charged on-release.
void eager_on_release(RunState& state);
/// On-the-fly catch-up charged on-read.
CatchUp lazy_on_access(RunState& state, EntityId id);
/// Full catch-up of every stale entity when release_no is on the schedule.
void incremental_on_release(RunState& state, int release_no);
/// Full catch-up of the stale members of the prediction set.
void predictive_on_release(RunState& state);

}  // namespace schemasim
