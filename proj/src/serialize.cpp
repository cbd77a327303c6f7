#include "schemasim/serialize.hpp"

#include <stdexcept>

#include "schemasim/config_io.hpp"

namespace schemasim {

namespace {

template <class Enum, class Parse>
Enum parse_or_throw(const Json& j, Parse parse, const char* what) {
  const auto v = parse(j.get<std::string>());
  if (!v) throw std::runtime_error(std::string{"unknown "} + what + " '" + j.get<std::string>() + "'");
  return *v;
}

Json io_json(const IoCounts& io) { return Json{{"reads", io.reads}, {"writes", io.writes}}; }

IoCounts io_from(const Json& j) { return {j.at("reads").get<std::uint64_t>(), j.at("writes").get<std::uint64_t>()}; }

Json scope_json(const Scope& s) {
  Json j = Json::object();
  j["strategy"] = s.strategy ? Json(std::string{to_string(*s.strategy)}) : Json(nullptr);
  j["run"] = s.run_index ? Json(*s.run_index) : Json(nullptr);
  j["release"] = s.release_no ? Json(*s.release_no) : Json(nullptr);
  return j;
}

Scope scope_from(const Json& j) {
  Scope s;
  if (!j.at("strategy").is_null()) s.strategy = parse_or_throw<StrategyKind>(j.at("strategy"), parse_strategy, "strategy");
  if (!j.at("run").is_null()) s.run_index = j.at("run").get<std::int64_t>();
  if (!j.at("release").is_null()) s.release_no = j.at("release").get<int>();
  return s;
}

}  // namespace

Json config_to_json(const ScenarioConfig& config) {
  const ScenarioConfig c = resolve(config);
  Json j = Json::object();
  for (const auto& key : config_keys()) {
    if (key == "distribution") {
      j[key] = std::string{to_string(c.distribution)};
    } else if (key == "catchup_charging") {
      j[key] = std::string{to_string(c.catchup_charging)};
    } else if (key == "incremental_schedule") {
      j[key] = c.incremental_schedule;
    } else if (key == "master_seed") {
      j[key] = c.master_seed;
    } else if (key == "runs") {
      j[key] = *c.runs;
    } else {
      j[key] = Json::parse(get_config_value(c, key));
    }
  }
  return j;
}

ScenarioConfig config_from_json(const Json& j) { return parse_config(j.dump()); }

Json smo_to_json(const Smo& smo) {
  Json j = Json::object();
  j["kind"] = std::string{to_string(smo.kind)};
  j["source"] = std::string{to_string(smo.source)};
  j["dest"] = smo.dest ? Json(std::string{to_string(*smo.dest)}) : Json(nullptr);
  j["property"] = smo.property;
  j["new_property"] = smo.new_property ? Json(*smo.new_property) : Json(nullptr);
  j["release_no"] = smo.release_no;
  return j;
}

Smo smo_from_json(const Json& j) {
  Smo smo;
  smo.kind = parse_or_throw<SmoKind>(j.at("kind"), parse_smo_kind, "SMO kind");
  smo.source = parse_or_throw<EntityType>(j.at("source"), parse_entity_type, "entity type");
  if (!j.at("dest").is_null()) smo.dest = parse_or_throw<EntityType>(j.at("dest"), parse_entity_type, "entity type");
  smo.property = j.at("property").get<std::string>();
  if (!j.at("new_property").is_null()) smo.new_property = j.at("new_property").get<std::string>();
  smo.release_no = j.at("release_no").get<int>();
  return smo;
}

Json release_record(const RunResult& run, const ReleaseMetrics& m) {
  Json j = Json::object();
  j["strategy"] = std::string{to_string(run.strategy)};
  j["run_index"] = run.run_index;
  j["seed"] = run.seed;
  j["config_digest"] = run.config_digest;
  j["release_no"] = m.release_no;
  j["on_read"] = io_json(m.on_read);
  j["on_release"] = io_json(m.on_release);
  j["on_read_io"] = m.on_read_io;
  j["on_release_io"] = m.on_release_io;
  j["cumulated_io"] = m.cumulated_io;
  j["on_read_cost"] = m.on_read_cost.usd();
  j["on_release_cost"] = m.on_release_cost.usd();
  j["cumulated_cost"] = m.cumulated_cost.usd();
  j["on_read_cost_pico_usd"] = m.on_read_cost.pico;
  j["on_release_cost_pico_usd"] = m.on_release_cost.pico;
  j["cumulated_cost_pico_usd"] = m.cumulated_cost.pico;
  j["mean_latency_ms"] = m.latency.mean;
  j["median_latency_ms"] = m.latency.median;
  j["p75_latency_ms"] = m.latency.p75;
  j["max_latency_ms"] = m.latency.max;
  j["latency_empty"] = m.latency.empty;
  j["access_count"] = m.access_count;
  j["population"] = m.population;
  j["stale_count"] = m.stale_count;
  j["conformance_violations"] = m.conformance_violations;
  j["smo"] = m.smo ? smo_to_json(*m.smo) : Json(nullptr);
  return j;
}

RunResult run_from_records(const std::vector<Json>& records) {
  RunResult run;
  for (const auto& j : records) {
    if (run.releases.empty()) {
      run.strategy = parse_or_throw<StrategyKind>(j.at("strategy"), parse_strategy, "strategy");
      run.run_index = j.at("run_index").get<std::int64_t>();
      run.seed = j.at("seed").get<std::uint64_t>();
      run.config_digest = j.at("config_digest").get<std::string>();
    }
    ReleaseMetrics m;
    m.release_no = j.at("release_no").get<int>();
    m.on_read = io_from(j.at("on_read"));
    m.on_release = io_from(j.at("on_release"));
    m.on_read_io = j.at("on_read_io").get<std::uint64_t>();
    m.on_release_io = j.at("on_release_io").get<std::uint64_t>();
    m.cumulated_io = j.at("cumulated_io").get<std::uint64_t>();
    m.on_read_cost = Money{j.at("on_read_cost_pico_usd").get<std::int64_t>()};
    m.on_release_cost = Money{j.at("on_release_cost_pico_usd").get<std::int64_t>()};
    m.cumulated_cost = Money{j.at("cumulated_cost_pico_usd").get<std::int64_t>()};
    m.latency.mean = j.at("mean_latency_ms").get<double>();
    m.latency.median = j.at("median_latency_ms").get<double>();
    m.latency.p75 = j.at("p75_latency_ms").get<double>();
    m.latency.max = j.at("max_latency_ms").get<double>();
    m.latency.empty = j.at("latency_empty").get<bool>();
    m.access_count = j.at("access_count").get<std::uint64_t>();
    m.population = j.at("population").get<std::uint64_t>();
    m.stale_count = j.at("stale_count").get<std::uint64_t>();
    m.conformance_violations = j.at("conformance_violations").get<std::uint64_t>();
    if (!j.at("smo").is_null()) m.smo = smo_from_json(j.at("smo"));
    run.releases.push_back(std::move(m));
  }
  if (!run.releases.empty()) run.final_population = run.releases.back().population;
  return run;
}

Json stats_to_json(const Stats& s) {
  Json j = Json::object();
  j["n"] = s.n;
  j["mean"] = s.mean;
  j["median"] = s.median;
  j["q1"] = s.q1;
  j["q3"] = s.q3;
  j["iqr"] = s.iqr;
  j["whisker_lo"] = s.whisker_lo;
  j["whisker_hi"] = s.whisker_hi;
  j["outliers"] = s.outliers;
  j["min"] = s.min;
  j["max"] = s.max;
  return j;
}

Stats stats_from_json(const Json& j) {
  Stats s;
  s.n = j.at("n").get<std::size_t>();
  s.mean = j.at("mean").get<double>();
  s.median = j.at("median").get<double>();
  s.q1 = j.at("q1").get<double>();
  s.q3 = j.at("q3").get<double>();
  s.iqr = j.at("iqr").get<double>();
  s.whisker_lo = j.at("whisker_lo").get<double>();
  s.whisker_hi = j.at("whisker_hi").get<double>();
  s.outliers = j.at("outliers").get<std::vector<double>>();
  s.min = j.at("min").get<double>();
  s.max = j.at("max").get<double>();
  return s;
}

Json batch_to_json(const BatchResult& b) {
  Json j = Json::object();
  j["config_digest"] = b.config_digest;
  Json strategies = Json::array();
  for (auto s : b.strategies) strategies.push_back(std::string{to_string(s)});
  j["strategies"] = strategies;
  j["runs"] = b.runs;
  j["run_seeds"] = b.run_seeds;
  Json cells = Json::array();
  for (const auto& c : b.cells) {
    Json cell = Json::object();
    cell["strategy"] = std::string{to_string(c.strategy)};
    cell["release_no"] = c.release_no;
    Json metrics = Json::object();
    for (Metric m : kAllMetrics) metrics[std::string{to_string(m)}] = stats_to_json(c.of(m));
    cell["metrics"] = metrics;
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  Json conv = Json::array();
  for (const auto& p : b.convergence) {
    conv.push_back(Json{{"checkpoint", p.checkpoint},
                        {"strategy", std::string{to_string(p.strategy)}},
                        {"release_no", p.release_no},
                        {"metric", std::string{to_string(p.metric)}},
                        {"deviation", p.deviation}});
  }
  j["convergence"] = std::move(conv);
  return j;
}

BatchResult batch_from_json(const Json& j) {
  BatchResult b;
  b.config_digest = j.at("config_digest").get<std::string>();
  for (const auto& s : j.at("strategies")) b.strategies.push_back(parse_or_throw<StrategyKind>(s, parse_strategy, "strategy"));
  b.runs = j.at("runs").get<std::int64_t>();
  b.run_seeds = j.at("run_seeds").get<std::vector<std::uint64_t>>();
  for (const auto& c : j.at("cells")) {
    CellStats cell;
    cell.strategy = parse_or_throw<StrategyKind>(c.at("strategy"), parse_strategy, "strategy");
    cell.release_no = c.at("release_no").get<int>();
    for (Metric m : kAllMetrics) {
      cell.metrics[static_cast<std::size_t>(m)] = stats_from_json(c.at("metrics").at(std::string{to_string(m)}));
    }
    b.cells.push_back(std::move(cell));
  }
  for (const auto& p : j.at("convergence")) {
    b.convergence.push_back({p.at("checkpoint").get<std::int64_t>(),
                             parse_or_throw<StrategyKind>(p.at("strategy"), parse_strategy, "strategy"),
                             p.at("release_no").get<int>(),
                             parse_or_throw<Metric>(p.at("metric"), parse_metric, "metric"),
                             p.at("deviation").get<double>()});
  }
  return b;
}

Json findings_to_json(const std::vector<Finding>& findings) {
  Json arr = Json::array();
  for (const auto& f : findings) {
    arr.push_back(Json{{"id", f.id},
                       {"kind", std::string{to_string(f.kind)}},
                       {"status", std::string{to_string(f.status)}},
                       {"scope", scope_json(f.scope)},
                       {"violations", f.violations},
                       {"message", f.message}});
  }
  return Json{{"overall", std::string{to_string(overall_status(findings))}}, {"findings", arr}};
}

std::vector<Finding> findings_from_json(const Json& j) {
  std::vector<Finding> out;
  for (const auto& f : j.at("findings")) {
    Finding x;
    x.id = f.at("id").get<std::string>();
    x.kind = f.at("kind").get<std::string>() == "tendency" ? InvariantKind::Tendency : InvariantKind::Requirement;
    const auto status = f.at("status").get<std::string>();
    x.status = status == "red" ? Status::Red : status == "yellow" ? Status::Yellow : Status::Green;
    x.scope = scope_from(f.at("scope"));
    x.violations = f.at("violations").get<std::uint64_t>();
    x.message = f.at("message").get<std::string>();
    out.push_back(std::move(x));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace schemasim
