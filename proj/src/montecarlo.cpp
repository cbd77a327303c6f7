#include "schemasim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "schemasim/config_io.hpp"
#include "schemasim/parallel.hpp"
#include "schemasim/rng.hpp"

namespace schemasim {

std::string_view to_string(Metric m) noexcept {
  switch (m) {
    case Metric::OnReadCost: return "on_read_cost";
    case Metric::OnReleaseCost: return "on_release_cost";
    case Metric::CumulatedCost: return "cumulated_cost";
    case Metric::MeanLatency: return "mean_latency";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view text) noexcept {
  for (Metric m : kAllMetrics) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

double metric_value(const ReleaseMetrics& r, Metric m) noexcept {
  switch (m) {
    case Metric::OnReadCost: return r.on_read_cost.usd();
    case Metric::OnReleaseCost: return r.on_release_cost.usd();
    case Metric::CumulatedCost: return r.cumulated_cost.usd();
    case Metric::MeanLatency: return r.latency.mean;
  }
  return 0.0;
}

const CellStats& BatchResult::cell(StrategyKind s, int release_no) const {
  for (const auto& c : cells) {
    if (c.strategy == s && c.release_no == release_no) return c;
  }
  throw std::out_of_range(fmt::format("no cell for {} release {}", to_string(s), release_no));
}

std::span<const RunResult> Batch::runs_of(StrategyKind s) const {
  const auto& list = summary.strategies;
  const auto it = std::find(list.begin(), list.end(), s);
  if (it == list.end()) return {};
  const auto n = static_cast<std::size_t>(summary.runs);
  return std::span<const RunResult>(runs).subspan(static_cast<std::size_t>(it - list.begin()) * n, n);
}

RunError::RunError(StrategyKind s, std::int64_t index, const std::string& what)
    : std::runtime_error(fmt::format("run {} ({}): {}", index, to_string(s), what)), strategy(s), run_index(index) {}

std::uint64_t run_seed(std::uint64_t master_seed, std::int64_t run_index) noexcept {
  return derive_seed(master_seed, static_cast<std::uint64_t>(run_index));
}

Batch run_batch(const ScenarioConfig& config, std::span<const StrategyKind> strategies, std::int64_t runs,
                std::uint64_t master_seed, std::size_t parallelism) {
  if (runs < 1) throw std::invalid_argument("a batch needs at least one run");
  const auto n = static_cast<std::size_t>(runs);
  const std::string digest = config_digest(config);

  std::vector<RunResult> raw(strategies.size() * n);
  parallel_for(raw.size(), parallelism == 0 ? default_parallelism() : parallelism, [&](std::size_t slot) {
    const StrategyKind s = strategies[slot / n];
    const auto index = static_cast<std::int64_t>(slot % n);
    try {
      raw[slot] = run_scenario(config, s, run_seed(master_seed, index), index);
    } catch (const std::exception& e) {
      throw RunError(s, index, e.what());
    }
  });

  Batch batch;
  batch.summary = aggregate(digest, strategies, runs, raw);
  batch.summary.run_seeds.clear();
  for (std::int64_t i = 0; i < runs; ++i) batch.summary.run_seeds.push_back(run_seed(master_seed, i));
  batch.runs = std::move(raw);
  return batch;
}

Batch run_batch(const ScenarioConfig& config, std::size_t parallelism) {
  return run_batch(config, kAllStrategies, config.effective_runs(), config.master_seed, parallelism);
}

namespace {

std::vector<double> column(std::span<const RunResult> runs, std::size_t release_idx, Metric m) {
  std::vector<double> out;
  out.reserve(runs.size());
  for (const auto& r : runs) out.push_back(metric_value(r.releases.at(release_idx), m));
  return out;
}

std::size_t release_count(std::span<const RunResult> runs) {
  return runs.empty() ? 0 : runs.front().releases.size();
}

}  // namespace

BatchResult aggregate(const std::string& config_digest, std::span<const StrategyKind> strategies,
                      std::int64_t runs, std::span<const RunResult> raw,
                      std::span<const std::int64_t> checkpoints) {
  const auto n = static_cast<std::size_t>(runs);
  if (raw.size() != strategies.size() * n) throw std::invalid_argument("run list does not match the batch shape");

  BatchResult out;
  out.config_digest = config_digest;
  out.strategies.assign(strategies.begin(), strategies.end());
  out.runs = runs;
  for (std::size_t i = 0; i < n && !raw.empty(); ++i) out.run_seeds.push_back(raw[i].seed);

  for (std::size_t s = 0; s < strategies.size(); ++s) {
    const auto group = raw.subspan(s * n, n);
    for (std::size_t r = 0; r < release_count(group); ++r) {
      CellStats cell;
      cell.strategy = strategies[s];
      cell.release_no = group.front().releases[r].release_no;
      for (Metric m : kAllMetrics) cell.metrics[static_cast<std::size_t>(m)] = summarize(column(group, r, m));
      out.cells.push_back(std::move(cell));
    }
  }
  out.convergence = convergence_report(strategies, runs, raw, checkpoints);
  return out;
}

std::vector<ConvergencePoint> convergence_report(std::span<const StrategyKind> strategies, std::int64_t runs,
                                                 std::span<const RunResult> raw,
                                                 std::span<const std::int64_t> checkpoints) {
  std::vector<ConvergencePoint> out;
  const auto n = static_cast<std::size_t>(runs);
  for (std::int64_t k : checkpoints) {
    if (k < 1 || k > runs) continue;
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      const auto group = raw.subspan(s * n, n);
      for (std::size_t r = 0; r < release_count(group); ++r) {
        for (Metric m : kAllMetrics) {
          const auto values = column(group, r, m);
          const double overall = mean_of(values);
          const double partial = mean_of(std::span<const double>(values).first(static_cast<std::size_t>(k)));
          const double dev = overall == 0.0 ? 0.0 : std::fabs(partial - overall) / std::fabs(overall);
          out.push_back({k, strategies[s], group.front().releases[r].release_no, m, dev});
        }
      }
    }
  }
  return out;
}

}  // namespace schemasim
