#include "schemasim/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <ostream>
#include <sstream>

#include "schemasim/serialize.hpp"

namespace schemasim {

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot read {}", p.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream o(p, std::ios::binary | std::ios::trunc);
  if (!o) throw std::runtime_error(fmt::format("cannot write {}", p.string()));
  o << text;
  if (!o.flush()) throw std::runtime_error(fmt::format("write to {} failed", p.string()));
}

void ensure_dir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw std::runtime_error(fmt::format("cannot create {}: {}", p.string(), ec.message()));
}

std::string num(double v) { return fmt::format("{}", v); }

void print_violations(const std::vector<Violation>& v, std::ostream& err) {
  for (const auto& x : v) err << "invalid " << x.field << ": " << x.reason << "\n";
}

BatchResult load_summary(const fs::path& dir) {
  const fs::path p = dir / "summary.json";
  if (!fs::exists(p)) throw std::runtime_error(fmt::format("no summary.json in {}", dir.string()));
  return batch_from_json(Json::parse(read_file(p)));
}

ScenarioConfig load_stored_config(const fs::path& dir) {
  const fs::path p = dir / "config.json";
  if (!fs::exists(p)) throw std::runtime_error(fmt::format("no config.json in {}", dir.string()));
  return config_from_json(Json::parse(read_file(p)).at("config"));
}

std::vector<RunResult> load_runs(const fs::path& dir, const BatchResult& summary) {
  std::vector<RunResult> runs;
  for (StrategyKind s : summary.strategies) {
    for (std::int64_t i = 0; i < summary.runs; ++i) {
      const fs::path p = dir / "runs" / std::string{to_string(s)} / fmt::format("run_{}.jsonl", i);
      std::istringstream in(read_file(p));
      std::vector<Json> records;
      for (std::string line; std::getline(in, line);) {
        if (!line.empty()) records.push_back(Json::parse(line));
      }
      runs.push_back(run_from_records(records));
    }
  }
  return runs;
}

int exit_code_for(Status s) { return s == Status::Red ? 2 : 0; }

}  // namespace

fs::path default_output_root() {
  if (const char* env = std::getenv("SCHEMASIM_OUT"); env != nullptr && *env != '\0') return fs::path(env);
  return fs::path("out");
}

ScenarioConfig load_config(const std::optional<fs::path>& file, const std::vector<Assignment>& overrides) {
  ScenarioConfig c;
  if (file) c = parse_config(read_file(*file));
  return config_from_assignments(overrides, c);
}

void write_batch_artifacts(const fs::path& dir, const ScenarioConfig& config, const Batch& batch,
                           const std::vector<Finding>& findings) {
  ensure_dir(dir);
  Json cfg = Json::object();
  cfg["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  cfg["digest"] = config_digest(config);
  cfg["config"] = config_to_json(config);
  write_file(dir / "config.json", dump(cfg));

  const auto n = static_cast<std::size_t>(batch.summary.runs);
  for (std::size_t s = 0; s < batch.summary.strategies.size(); ++s) {
    const fs::path sdir = dir / "runs" / std::string{to_string(batch.summary.strategies[s])};
    ensure_dir(sdir);
    for (std::size_t i = 0; i < n; ++i) {
      const RunResult& run = batch.runs[s * n + i];
      std::string text;
      for (const auto& m : run.releases) {
        text += release_record(run, m).dump();
        text += '\n';
      }
      write_file(sdir / fmt::format("run_{}.jsonl", run.run_index), text);
    }
  }
  write_file(dir / "summary.json", dump(batch_to_json(batch.summary)));
  write_file(dir / "findings.json", dump(findings_to_json(findings)));
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const ScenarioConfig config = load_config(opts.config_file, opts.overrides);
    if (const auto v = validate_config(config); !v.empty()) {
      print_violations(v, err);
      return 1;
    }
    const fs::path dir = opts.out_dir.value_or(default_output_root() / config_digest(config));
    const Batch batch = run_batch(config, opts.parallelism);
    const auto findings = check_batch(config, batch.summary, batch.runs);
    write_batch_artifacts(dir, config, batch, findings);

    const Status status = overall_status(findings);
    out << fmt::format("{} runs x {} strategies x {} releases -> {}\n", batch.summary.runs,
                       batch.summary.strategies.size(), config.releases, dir.string());
    for (const auto& f : findings) out << fmt::format("  {:<3} {:<6} {}\n", f.id, to_string(f.status), f.message);
    out << "overall: " << to_string(status) << "\n";
    return exit_code_for(status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

std::size_t SweepSpec::size() const noexcept {
  return distributions.size() * workload_executions.size() * multi_type_shares.size() * cardinalities.size();
}

std::vector<ScenarioConfig> SweepSpec::configurations() const {
  std::vector<ScenarioConfig> out;
  for (auto d : distributions) {
    for (auto e : workload_executions) {
      for (auto c : multi_type_shares) {
        for (auto n : cardinalities) {
          ScenarioConfig cfg = base;
          cfg.distribution = d;
          cfg.workload_executions = e;
          cfg.multi_type_share = c;
          cfg.cardinality_n = n;
          out.push_back(cfg);
        }
      }
    }
  }
  return out;
}

SweepSpec sweep_from_assignments(const std::vector<Assignment>& assignments) {
  SweepSpec spec;
  std::vector<Assignment> base;
  for (const auto& [key, value] : assignments) {
    if (!key.starts_with("sweep.")) {
      base.emplace_back(key, value);
      continue;
    }
    const std::string dim = key.substr(6);
    std::vector<std::string> items;
    std::string v = value;
    if (v.size() >= 2 && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
    std::istringstream in(v);
    for (std::string item; std::getline(in, item, ',');) {
      const auto b = item.find_first_not_of(" \t\"");
      const auto e = item.find_last_not_of(" \t\"");
      if (b != std::string::npos) items.push_back(item.substr(b, e - b + 1));
    }
    if (items.empty()) throw ConfigError(fmt::format("{}: empty value list", key));
    ScenarioConfig probe;
    if (dim == "distribution") {
      spec.distributions.clear();
      for (const auto& i : items) {
        set_config_value(probe, "distribution", i);
        spec.distributions.push_back(probe.distribution);
      }
    } else if (dim == "workload_executions") {
      spec.workload_executions.clear();
      for (const auto& i : items) {
        set_config_value(probe, "workload_executions", i);
        spec.workload_executions.push_back(probe.workload_executions);
      }
    } else if (dim == "multi_type_share") {
      spec.multi_type_shares.clear();
      for (const auto& i : items) {
        set_config_value(probe, "multi_type_share", i);
        spec.multi_type_shares.push_back(probe.multi_type_share);
      }
    } else if (dim == "cardinality_n") {
      spec.cardinalities.clear();
      for (const auto& i : items) {
        set_config_value(probe, "cardinality_n", i);
        spec.cardinalities.push_back(probe.cardinality_n);
      }
    } else {
      throw ConfigError(fmt::format("unknown sweep dimension '{}'", key));
    }
  }
  spec.base = config_from_assignments(base);
  return spec;
}

namespace {

double final_mean_cost(const BatchResult& b, StrategyKind s) {
  int last = 0;
  for (const auto& c : b.cells) {
    if (c.strategy == s) last = std::max(last, c.release_no);
  }
  return b.cell(s, last).of(Metric::CumulatedCost).mean;
}

double mean_latency(const BatchResult& b, StrategyKind s) {
  double sum = 0.0;
  int n = 0;
  for (const auto& c : b.cells) {
    if (c.strategy != s) continue;
    sum += c.of(Metric::MeanLatency).mean;
    ++n;
  }
  return n == 0 ? 0.0 : sum / n;
}

std::optional<double> ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  return num / den;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string{}; }

}  // namespace

std::vector<FactorRow> factor_table(const SweepSpec& spec, const std::vector<SweepCell>& cells) {
  std::vector<FactorRow> rows;
  auto find = [&](const ScenarioConfig& cfg) -> const BatchResult* {
    const std::string d = config_digest(cfg);
    for (const auto& c : cells) {
      if (c.digest == d && c.summary) return &*c.summary;
    }
    return nullptr;
  };
  auto emit = [&](const std::string& dim, const std::string& from_label, const std::string& to_label,
                  const ScenarioConfig& from, const ScenarioConfig& to) {
    const BatchResult* a = find(from);
    const BatchResult* b = find(to);
    if (a == nullptr || b == nullptr) return;
    for (StrategyKind s : a->strategies) {
      rows.push_back({dim, from_label, to_label, s, ratio(final_mean_cost(*b, s), final_mean_cost(*a, s)),
                      ratio(mean_latency(*b, s), mean_latency(*a, s))});
    }
  };
  auto walk = [&](const std::string& dim, const auto& values, auto apply, auto label) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      ScenarioConfig from = spec.base;
      ScenarioConfig to = spec.base;
      apply(from, values[i]);
      apply(to, values[i + 1]);
      emit(dim, label(values[i]), label(values[i + 1]), from, to);
    }
  };
  walk("distribution", spec.distributions, [](ScenarioConfig& c, Distribution d) { c.distribution = d; },
       [](Distribution d) { return std::string{to_string(d)}; });
  walk("workload_executions", spec.workload_executions,
       [](ScenarioConfig& c, std::int64_t v) { c.workload_executions = v; },
       [](std::int64_t v) { return std::to_string(v); });
  walk("multi_type_share", spec.multi_type_shares, [](ScenarioConfig& c, double v) { c.multi_type_share = v; },
       [](double v) { return num(v); });
  walk("cardinality_n", spec.cardinalities, [](ScenarioConfig& c, std::int64_t v) { c.cardinality_n = v; },
       [](std::int64_t v) { return "1:" + std::to_string(v); });
  return rows;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  try {
    std::vector<Assignment> assignments;
    if (opts.sweep_file) assignments = parse_assignments(read_file(*opts.sweep_file));
    assignments.insert(assignments.end(), opts.overrides.begin(), opts.overrides.end());
    spec = sweep_from_assignments(assignments);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const fs::path root = opts.out_dir.value_or(default_output_root());
  std::vector<SweepCell> cells;
  bool failed = false;
  const auto configs = spec.configurations();
  for (std::size_t k = 0; k < configs.size(); ++k) {
    SweepCell cell;
    cell.config = configs[k];
    cell.digest = config_digest(cell.config);
    try {
      if (const auto v = validate_config(cell.config); !v.empty()) {
        throw ConfigError(fmt::format("{}: {}", v.front().field, v.front().reason));
      }
      const Batch batch = run_batch(cell.config, opts.parallelism);
      const auto findings = check_batch(cell.config, batch.summary, batch.runs);
      write_batch_artifacts(root / cell.digest, cell.config, batch, findings);
      cell.status = overall_status(findings);
      cell.summary = batch.summary;
    } catch (const std::exception& e) {
      cell.status = Status::Red;
      cell.error = e.what();
    }
    failed = failed || cell.status == Status::Red;
    out << fmt::format("[{}/{}] {} {} x{} c={} 1:{} {}{}\n", k + 1, configs.size(), cell.digest,
                       to_string(cell.config.distribution), cell.config.workload_executions,
                       cell.config.multi_type_share, cell.config.cardinality_n, to_string(cell.status),
                       cell.error.empty() ? "" : " (" + cell.error + ")");
    cells.push_back(std::move(cell));
  }

  try {
    ensure_dir(root);
    Json index = Json::array();
    for (const auto& c : cells) {
      index.push_back(Json{{"digest", c.digest},
                           {"distribution", std::string{to_string(c.config.distribution)}},
                           {"workload_executions", c.config.workload_executions},
                           {"multi_type_share", c.config.multi_type_share},
                           {"cardinality_n", c.config.cardinality_n},
                           {"runs", c.config.effective_runs()},
                           {"status", std::string{to_string(c.status)}},
                           {"error", c.error}});
    }
    write_file(root / "sweep.json", dump(Json{{"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
                                              {"base", config_to_json(spec.base)},
                                              {"configurations", index}}));

    const auto rows = factor_table(spec, cells);
    std::string csv = "dimension,from,to,strategy,cost_factor,latency_factor\n";
    Json jrows = Json::array();
    for (const auto& r : rows) {
      csv += fmt::format("{},{},{},{},{},{}\n", r.dimension, r.from, r.to, to_string(r.strategy),
                         opt_num(r.cost_factor), opt_num(r.latency_factor));
      jrows.push_back(Json{{"dimension", r.dimension},
                           {"from", r.from},
                           {"to", r.to},
                           {"strategy", std::string{to_string(r.strategy)}},
                           {"cost_factor", r.cost_factor ? Json(*r.cost_factor) : Json(nullptr)},
                           {"latency_factor", r.latency_factor ? Json(*r.latency_factor) : Json(nullptr)}});
    }
    write_file(root / "factor_table.csv", csv);
    write_file(root / "factor_table.json", dump(jrows));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  out << fmt::format("{} configurations -> {}\n", cells.size(), root.string());
  return failed ? 2 : 0;
}

std::string export_csv(const BatchResult& summary, const std::string& figure, std::optional<Metric> metric) {
  std::string csv;
  if (figure == "cost-curves" || figure == "latency-curves") {
    const Metric m = figure == "latency-curves" ? Metric::MeanLatency : metric.value_or(Metric::CumulatedCost);
    csv = "release,strategy,mean,median\n";
    for (const auto& c : summary.cells) {
      const Stats& s = c.of(m);
      csv += fmt::format("{},{},{},{}\n", c.release_no, to_string(c.strategy), num(s.mean), num(s.median));
    }
  } else if (figure == "boxplot") {
    const Metric m = metric.value_or(Metric::CumulatedCost);
    csv = "release,strategy,q1,median,q3,whisker_lo,whisker_hi,outlier_csv\n";
    for (const auto& c : summary.cells) {
      const Stats& s = c.of(m);
      std::string outliers;
      for (double o : s.outliers) {
        if (!outliers.empty()) outliers += ',';
        outliers += num(o);
      }
      csv += fmt::format("{},{},{},{},{},{},{},\"{}\"\n", c.release_no, to_string(c.strategy), num(s.q1),
                         num(s.median), num(s.q3), num(s.whisker_lo), num(s.whisker_hi), outliers);
    }
  } else if (figure == "convergence") {
    const Metric m = metric.value_or(Metric::CumulatedCost);
    csv = "checkpoint,strategy,release,deviation\n";
    for (const auto& p : summary.convergence) {
      if (p.metric != m) continue;
      csv += fmt::format("{},{},{},{}\n", p.checkpoint, to_string(p.strategy), p.release_no, num(p.deviation));
    }
  } else {
    throw std::invalid_argument(
        fmt::format("unknown figure '{}' (cost-curves, latency-curves, boxplot, convergence)", figure));
  }
  return csv;
}

int cmd_export(const ExportOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const BatchResult summary = load_summary(opts.dir);
    const std::string csv = export_csv(summary, opts.figure, opts.metric);
    const fs::path target = opts.output.value_or(opts.dir / (opts.figure + ".csv"));
    write_file(target, csv);
    out << target.string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_check(const fs::path& dir, std::ostream& out, std::ostream& err) {
  try {
    const ScenarioConfig config = load_stored_config(dir);
    const BatchResult summary = load_summary(dir);
    const auto runs = load_runs(dir, summary);
    const auto findings = check_batch(config, summary, runs);
    for (const auto& f : findings) out << fmt::format("{:<3} {:<6} {}\n", f.id, to_string(f.status), f.message);
    const Status status = overall_status(findings);
    out << "overall: " << to_string(status) << "\n";
    return exit_code_for(status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_validate(const std::optional<fs::path>& config_file, const std::vector<Assignment>& overrides,
                 bool strict_grid, std::ostream& out, std::ostream& err) {
  try {
    const ScenarioConfig config = load_config(config_file, overrides);
    const auto v = validate_config(config, strict_grid);
    if (!v.empty()) {
      print_violations(v, err);
      return 1;
    }
    out << "valid, digest " << config_digest(config) << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace schemasim
