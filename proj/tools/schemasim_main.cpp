#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schemasim/commands.hpp"
#include "schemasim/kernels.hpp"
#include "schemasim/serialize.hpp"

namespace {

std::vector<schemasim::Assignment> split_overrides(const std::vector<std::string>& items) {
  std::vector<schemasim::Assignment> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw schemasim::ConfigError("--set expects key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    if (key.starts_with("scenario.")) key.erase(0, 9);
    out.emplace_back(key, item.substr(eq + 1));
  }
  return out;
}

template <class T>
std::optional<T> opt(const T& value, const CLI::Option* o) {
  return o->count() > 0 ? std::optional<T>(value) : std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace schemasim;

  CLI::App app{"Schema evolution migration strategy simulator"};
  app.set_version_flag("--version", std::string{kToolName} + " " + kToolVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;
  std::size_t jobs = 0;
  std::int64_t runs = 0;
  std::int64_t releases = 0;
  std::uint64_t seed = 0;

  auto* run = app.add_subcommand("run", "Run all four strategies over a Monte Carlo batch");
  auto* run_cfg = run->add_option("config", config_path, "Configuration file (key = value or JSON)");
  run->add_option("--set,-s", sets, "Override one key: key=value (repeatable)");
  auto* run_out = run->add_option("--out,-o", out_dir, "Output directory (default $SCHEMASIM_OUT/<digest>)");
  auto* run_runs = run->add_option("--runs", runs, "Number of runs")->check(CLI::PositiveNumber);
  auto* run_rel = run->add_option("--releases", releases, "Number of releases")->check(CLI::NonNegativeNumber);
  auto* run_seed = run->add_option("--seed", seed, "Master seed");
  run->add_option("--parallelism,-j", jobs, "Worker threads (0 = all cores)");

  std::string sweep_path;
  auto* sweep = app.add_subcommand("sweep", "Run every configuration of a sweep");
  auto* sweep_file = sweep->add_option("sweep", sweep_path, "Sweep file (sweep.* lists plus base keys)");
  sweep->add_option("--set,-s", sets, "Override one key: key=value (repeatable)");
  auto* sweep_out = sweep->add_option("--out,-o", out_dir, "Output root (default $SCHEMASIM_OUT)");
  sweep->add_option("--parallelism,-j", jobs, "Worker threads (0 = all cores)");

  std::string export_dir;
  std::string figure;
  std::string metric_name;
  std::string export_output;
  auto* exp = app.add_subcommand("export", "Write plot-ready CSV from stored artifacts");
  exp->add_option("dir", export_dir, "Artifact directory of one configuration")->required();
  exp->add_option("--figure,-f", figure, "cost-curves | latency-curves | boxplot | convergence")
      ->required()
      ->check(CLI::IsMember({"cost-curves", "latency-curves", "boxplot", "convergence"}));
  auto* exp_metric = exp->add_option("--metric,-m", metric_name,
                                     "on_read_cost | on_release_cost | cumulated_cost | mean_latency");
  auto* exp_out = exp->add_option("--output", export_output, "CSV path (default <dir>/<figure>.csv)");

  std::string check_dir;
  auto* check = app.add_subcommand("check", "Re-evaluate the invariant catalog on stored artifacts");
  check->add_option("dir", check_dir, "Artifact directory of one configuration")->required();

  bool strict = false;
  auto* validate = app.add_subcommand("validate", "Lint a configuration");
  auto* val_cfg = validate->add_option("config", config_path, "Configuration file");
  validate->add_option("--set,-s", sets, "Override one key: key=value (repeatable)");
  validate->add_flag("--strict-grid", strict, "Require grid values for the swept dimensions");

  auto* info = app.add_subcommand("info", "Print build information");

  CLI11_PARSE(app, argc, argv);

  try {
    auto overrides = split_overrides(sets);
    if (run->parsed()) {
      if (run_runs->count()) overrides.emplace_back("runs", std::to_string(runs));
      if (run_rel->count()) overrides.emplace_back("releases", std::to_string(releases));
      if (run_seed->count()) overrides.emplace_back("master_seed", std::to_string(seed));
      RunOptions o{opt(std::filesystem::path(config_path), run_cfg), overrides,
                   opt(std::filesystem::path(out_dir), run_out), jobs};
      return cmd_run(o, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
      SweepOptions o{opt(std::filesystem::path(sweep_path), sweep_file), overrides,
                     opt(std::filesystem::path(out_dir), sweep_out), jobs};
      return cmd_sweep(o, std::cout, std::cerr);
    }
    if (exp->parsed()) {
      std::optional<Metric> metric;
      if (exp_metric->count()) {
        metric = parse_metric(metric_name);
        if (!metric) {
          std::cerr << "error: unknown metric '" << metric_name << "'\n";
          return 1;
        }
      }
      ExportOptions o{export_dir, figure, metric, opt(std::filesystem::path(export_output), exp_out)};
      return cmd_export(o, std::cout, std::cerr);
    }
    if (check->parsed()) return cmd_check(check_dir, std::cout, std::cerr);
    if (validate->parsed()) {
      return cmd_validate(opt(std::filesystem::path(config_path), val_cfg), overrides, strict, std::cout, std::cerr);
    }
    if (info->parsed()) {
      std::cout << kToolName << " " << kToolVersion << "\nkernel isa: " << kernels::to_string(kernels::active_isa())
                << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
