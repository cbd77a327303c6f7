#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schemasim/simulator.hpp"
#include "schemasim/stats.hpp"

namespace schemasim {

enum class Metric : std::uint8_t { OnReadCost, OnReleaseCost, CumulatedCost, MeanLatency };

inline constexpr std::array<Metric, 4> kAllMetrics{Metric::OnReadCost, Metric::OnReleaseCost,
                                                   Metric::CumulatedCost, Metric::MeanLatency};

std::string_view to_string(Metric m) noexcept;
std::optional<Metric> parse_metric(std::string_view text) noexcept;

/// Value of `m` in one release record (costs in USD, latency in ms).
double metric_value(const ReleaseMetrics& r, Metric m) noexcept;

inline constexpr std::array<std::int64_t, 4> kDefaultCheckpoints{10, 20, 40, 80};

struct ConvergencePoint {
  std::int64_t checkpoint = 0;
  StrategyKind strategy = StrategyKind::Eager;
  int release_no = 0;
  Metric metric = Metric::CumulatedCost;
  double deviation = 0.0;

  friend bool operator==(const ConvergencePoint&, const ConvergencePoint&) = default;
};

/// Distribution summaries of one (strategy, release) cell.
struct CellStats {
  StrategyKind strategy = StrategyKind::Eager;
  int release_no = 0;
  std::array<Stats, kAllMetrics.size()> metrics;

  const Stats& of(Metric m) const noexcept { return metrics[static_cast<std::size_t>(m)]; }

  friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct BatchResult {
  std::string config_digest;
  std::vector<StrategyKind> strategies;
  std::int64_t runs = 0;
  std::vector<std::uint64_t> run_seeds;
  std::vector<CellStats> cells;  // strategy-major, then release
  std::vector<ConvergencePoint> convergence;

  const CellStats& cell(StrategyKind s, int release_no) const;

  friend bool operator==(const BatchResult&, const BatchResult&) = default;
};

struct Batch {
  BatchResult summary;
  /// Strategy-major, then run index: runs[s * n + i] is run i of strategies[s].
  std::vector<RunResult> runs;

  std::span<const RunResult> runs_of(StrategyKind s) const;
};

/// A run failure tagged with the run that raised it.
class RunError : public std::runtime_error {
 public:
  RunError(StrategyKind strategy, std::int64_t run_index, const std::string& what);
  StrategyKind strategy;
  std::int64_t run_index;
};

/// Seed of run `run_index` under `master_seed`; shared by all strategies.
std::uint64_t run_seed(std::uint64_t master_seed, std::int64_t run_index) noexcept;

/// Runs every (strategy, run index) pair on `parallelism` threads (0 = all
/// cores). The result does not depend on `parallelism`.
Batch run_batch(const ScenarioConfig& config, std::span<const StrategyKind> strategies, std::int64_t runs,
                std::uint64_t master_seed, std::size_t parallelism = 0);

/// run_batch with the config's strategies-independent settings: all four
/// strategies, effective_runs() and master_seed.
Batch run_batch(const ScenarioConfig& config, std::size_t parallelism = 0);

/// Aggregates raw runs (in the layout of Batch::runs) into a BatchResult.
BatchResult aggregate(const std::string& config_digest, std::span<const StrategyKind> strategies,
                      std::int64_t runs, std::span<const RunResult> raw,
                      std::span<const std::int64_t> checkpoints = kDefaultCheckpoints);

/// Per checkpoint k <= runs: |mean of first k runs - mean of all runs| / mean
/// of all runs, for every (strategy, release, metric). A zero overall mean
/// gives deviation 0.
std::vector<ConvergencePoint> convergence_report(std::span<const StrategyKind> strategies, std::int64_t runs,
                                                 std::span<const RunResult> raw,
                                                 std::span<const std::int64_t> checkpoints = kDefaultCheckpoints);

}  // namespace schemasim
