#include "schemasim/config_io.hpp"

#include <algorithm>
#include <charconv>
#include <fmt/format.h>
#include <functional>
#include <map>

#include "json.hpp"
#include "schemasim/rng.hpp"

namespace schemasim {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  throw ConfigError(fmt::format("{}: cannot read '{}' as {}", key, value, expected));
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T out{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    bad_value(key, text, std::is_floating_point_v<T> ? "a number" : "an integer");
  }
  return out;
}

std::string format_double(double v) { return fmt::format("{}", v); }

struct Field {
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, std::string_view, std::string_view)> set;
};

template <class M>
Field int_field(M ScenarioConfig::*member) {
  return {[member](const ScenarioConfig& c) { return std::to_string(c.*member); },
          [member](ScenarioConfig& c, std::string_view k, std::string_view v) {
            c.*member = parse_number<std::remove_reference_t<decltype(c.*member)>>(k, v);
          }};
}

Field double_field(double ScenarioConfig::*member) {
  return {[member](const ScenarioConfig& c) { return format_double(c.*member); },
          [member](ScenarioConfig& c, std::string_view k, std::string_view v) {
            c.*member = parse_number<double>(k, v);
          }};
}

const std::map<std::string, Field, std::less<>>& fields() {
  static const std::map<std::string, Field, std::less<>> table = [] {
    std::map<std::string, Field, std::less<>> f;
    f["initial_entities"] = int_field(&ScenarioConfig::initial_entities);
    f["scale_factor"] = int_field(&ScenarioConfig::scale_factor);
    f["growth_rate"] = double_field(&ScenarioConfig::growth_rate);
    f["cardinality_n"] = int_field(&ScenarioConfig::cardinality_n);
    f["properties_per_type"] = int_field(&ScenarioConfig::properties_per_type);
    f["distribution"] = {
        [](const ScenarioConfig& c) { return std::string{to_string(c.distribution)}; },
        [](ScenarioConfig& c, std::string_view k, std::string_view v) {
          const auto d = parse_distribution(trim(v));
          if (!d) bad_value(k, v, "uniform|pareto");
          c.distribution = *d;
        }};
    f["pareto_hot_fraction"] = double_field(&ScenarioConfig::pareto_hot_fraction);
    f["hot_access_share"] = double_field(&ScenarioConfig::hot_access_share);
    f["workload_executions"] = int_field(&ScenarioConfig::workload_executions);
    f["access_fraction"] = double_field(&ScenarioConfig::access_fraction);
    f["player_access_weight"] = double_field(&ScenarioConfig::player_access_weight);
    f["releases"] = int_field(&ScenarioConfig::releases);
    f["multi_type_share"] = double_field(&ScenarioConfig::multi_type_share);
    f["price_per_million_io"] = double_field(&ScenarioConfig::price_per_million_io);
    f["latency_base_ms"] = double_field(&ScenarioConfig::latency_base_ms);
    f["latency_single_ms"] = double_field(&ScenarioConfig::latency_single_ms);
    f["latency_multi_ms"] = double_field(&ScenarioConfig::latency_multi_ms);
    f["latency_jitter_ms"] = double_field(&ScenarioConfig::latency_jitter_ms);
    f["catchup_charging"] = {
        [](const ScenarioConfig& c) { return std::string{to_string(c.catchup_charging)}; },
        [](ScenarioConfig& c, std::string_view k, std::string_view v) {
          const auto m = parse_catchup_charging(trim(v));
          if (!m) bad_value(k, v, "per_step|batch");
          c.catchup_charging = *m;
        }};
    f["incremental_schedule"] = {
        [](const ScenarioConfig& c) {
          std::string out;
          for (std::size_t i = 0; i < c.incremental_schedule.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(c.incremental_schedule[i]);
          }
          return out;
        },
        [](ScenarioConfig& c, std::string_view k, std::string_view v) {
          std::vector<std::int64_t> out;
          v = trim(v);
          if (!v.empty() && v.front() == '[' && v.back() == ']') v = trim(v.substr(1, v.size() - 2));
          while (!v.empty()) {
            const auto comma = v.find(',');
            out.push_back(parse_number<std::int64_t>(k, v.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            v = v.substr(comma + 1);
          }
          std::sort(out.begin(), out.end());
          out.erase(std::unique(out.begin(), out.end()), out.end());
          c.incremental_schedule = std::move(out);
        }};
    f["prediction_fraction"] = double_field(&ScenarioConfig::prediction_fraction);
    f["smoothing_alpha"] = double_field(&ScenarioConfig::smoothing_alpha);
    f["master_seed"] = int_field(&ScenarioConfig::master_seed);
    f["runs"] = {
        [](const ScenarioConfig& c) { return c.runs ? std::to_string(*c.runs) : std::string{"auto"}; },
        [](ScenarioConfig& c, std::string_view k, std::string_view v) {
          if (trim(v) == "auto") {
            c.runs.reset();
          } else {
            c.runs = parse_number<std::int64_t>(k, v);
          }
        }};
    return f;
  }();
  return table;
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ',';
      out += json_scalar(e);
    }
    return out;
  }
  if (v.is_null()) return "auto";
  return v.dump();
}

void flatten(const nlohmann::json& obj, const std::string& prefix, std::vector<Assignment>& out) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else {
      out.emplace_back(key, json_scalar(*it));
    }
  }
}

std::string strip_prefix(std::string key) {
  constexpr std::string_view kPrefix = "scenario.";
  if (key.starts_with(kPrefix)) key.erase(0, kPrefix.size());
  return key;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : fields()) k.push_back(name);
    return k;
  }();
  return keys;
}

void set_config_value(ScenarioConfig& config, std::string_view key, std::string_view value) {
  const auto it = fields().find(key);
  if (it == fields().end()) throw ConfigError(fmt::format("unknown configuration key '{}'", key));
  it->second.set(config, key, value);
}

std::string get_config_value(const ScenarioConfig& config, std::string_view key) {
  const auto it = fields().find(key);
  if (it == fields().end()) throw ConfigError(fmt::format("unknown configuration key '{}'", key));
  return it->second.get(config);
}

std::vector<Assignment> parse_assignments(std::string_view text) {
  std::vector<Assignment> out;
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(fmt::format("invalid JSON configuration: {}", e.what()));
    }
    flatten(doc, "", out);
    for (auto& [k, v] : out) k = strip_prefix(k);
    return out;
  }

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected key = value", line_no));
    }
    out.emplace_back(strip_prefix(std::string{trim(line.substr(0, eq))}), std::string{trim(line.substr(eq + 1))});
  }
  return out;
}

ScenarioConfig config_from_assignments(const std::vector<Assignment>& assignments, ScenarioConfig base) {
  for (const auto& [k, v] : assignments) set_config_value(base, k, v);
  return base;
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  return config_from_assignments(parse_assignments(text), std::move(base));
}

ScenarioConfig resolve(ScenarioConfig config) {
  config.runs = config.effective_runs();
  return config;
}

std::string canonical_text(const ScenarioConfig& config) {
  const ScenarioConfig resolved = resolve(config);
  std::string out;
  for (const auto& [name, field] : fields()) {
    out += name;
    out += '=';
    out += field.get(resolved);
    out += '\n';
  }
  return out;
}

std::string config_digest(const ScenarioConfig& config) {
  return fmt::format("{:016x}", fnv1a64(canonical_text(config)));
}

}  // namespace schemasim
