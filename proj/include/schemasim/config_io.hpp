#pragma once

// Scenario configuration text formats and the configuration digest.
//
// Text format: one `key = value` per line, `#` starts a comment, keys are
// ScenarioConfig field names optionally prefixed with `scenario.`. Lists are
// comma separated. A document whose first non-blank character is `{` is read
// as a flat JSON object with the same keys instead.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schemasim/domain.hpp"

namespace schemasim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Assignment = std::pair<std::string, std::string>;

/// Known keys, in canonical (sorted) order.
const std::vector<std::string>& config_keys();

/// Sets one field from its text form. Throws ConfigError for an unknown key
/// or an unparsable value.
void set_config_value(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Text form of one field.
std::string get_config_value(const ScenarioConfig& config, std::string_view key);

/// Raw key/value pairs of a text or JSON document, in document order, with the
/// `scenario.` prefix stripped. Other keys (e.g. `sweep.*`) pass through.
std::vector<Assignment> parse_assignments(std::string_view text);

/// Defaults overridden by every assignment. Throws ConfigError on unknown keys.
ScenarioConfig config_from_assignments(const std::vector<Assignment>& assignments,
                                       ScenarioConfig base = {});
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});

/// `runs` set to effective_runs().
ScenarioConfig resolve(ScenarioConfig config);

/// Sorted `key=value` lines of the resolved configuration.
std::string canonical_text(const ScenarioConfig& config);

/// 16 hex digits of FNV-1a over canonical_text.
std::string config_digest(const ScenarioConfig& config);

}  // namespace schemasim
