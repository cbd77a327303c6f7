#pragma once

// Subcommands of the command-line tool. Each returns the process exit code:
// 0 success, 1 execution or input error, 2 a Red finding (or a failed sweep
// configuration).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schemasim/config_io.hpp"
#include "schemasim/invariants.hpp"
#include "schemasim/montecarlo.hpp"

namespace schemasim {

namespace fs = std::filesystem;

/// Output root when no directory is given: $SCHEMASIM_OUT, else "out".
fs::path default_output_root();

/// Config file (text or JSON, optional) followed by the overrides.
ScenarioConfig load_config(const std::optional<fs::path>& file, const std::vector<Assignment>& overrides);

/// Writes config.json, runs/<strategy>/run_<i>.jsonl, summary.json and
/// findings.json under `dir`.
void write_batch_artifacts(const fs::path& dir, const ScenarioConfig& config, const Batch& batch,
                           const std::vector<Finding>& findings);

struct RunOptions {
  std::optional<fs::path> config_file;
  std::vector<Assignment> overrides;
  std::optional<fs::path> out_dir;
  std::size_t parallelism = 0;
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

/// Cartesian product of the varied dimensions over a base configuration.
struct SweepSpec {
  ScenarioConfig base;
  std::vector<Distribution> distributions{Distribution::Uniform, Distribution::Pareto};
  std::vector<std::int64_t> workload_executions{1, 2, 4};
  std::vector<double> multi_type_shares{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::int64_t> cardinalities{1, 10, 25};

  std::size_t size() const noexcept;
  /// Ordered by distribution, executions, share, cardinality.
  std::vector<ScenarioConfig> configurations() const;
};

/// `sweep.distribution`, `sweep.workload_executions`, `sweep.multi_type_share`
/// and `sweep.cardinality_n` (comma lists) replace a dimension; all other keys
/// set the base configuration.
SweepSpec sweep_from_assignments(const std::vector<Assignment>& assignments);

/// One row of the factor table: the ratio of a strategy's mean final
/// cumulated cost and mean per-release latency between two neighbouring
/// values of one dimension, the other dimensions held at the base values.
struct FactorRow {
  std::string dimension;
  std::string from;
  std::string to;
  StrategyKind strategy = StrategyKind::Eager;
  std::optional<double> cost_factor;
  std::optional<double> latency_factor;
};

struct SweepCell {
  ScenarioConfig config;
  std::string digest;
  std::optional<BatchResult> summary;
  Status status = Status::Green;
  std::string error;
};

std::vector<FactorRow> factor_table(const SweepSpec& spec, const std::vector<SweepCell>& cells);

struct SweepOptions {
  std::optional<fs::path> sweep_file;
  std::vector<Assignment> overrides;
  std::optional<fs::path> out_dir;
  std::size_t parallelism = 0;
};

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

struct ExportOptions {
  fs::path dir;
  std::string figure;  // cost-curves | latency-curves | boxplot | convergence
  std::optional<Metric> metric;
  std::optional<fs::path> output;  // default <dir>/<figure>.csv
};

/// CSV text of one figure from a BatchResult.
std::string export_csv(const BatchResult& summary, const std::string& figure, std::optional<Metric> metric);

int cmd_export(const ExportOptions& opts, std::ostream& out, std::ostream& err);

/// Re-evaluates the invariants on stored artifacts.
int cmd_check(const fs::path& dir, std::ostream& out, std::ostream& err);

int cmd_validate(const std::optional<fs::path>& config_file, const std::vector<Assignment>& overrides,
                 bool strict_grid, std::ostream& out, std::ostream& err);

}  // namespace schemasim
