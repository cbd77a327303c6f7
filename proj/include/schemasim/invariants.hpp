#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schemasim/montecarlo.hpp"

namespace schemasim {

enum class InvariantKind : std::uint8_t { Requirement, Tendency };
enum class Status : std::uint8_t { Green, Yellow, Red };

std::string_view to_string(InvariantKind k) noexcept;
std::string_view to_string(Status s) noexcept;

struct Scope {
  std::optional<StrategyKind> strategy;
  std::optional<std::int64_t> run_index;
  std::optional<int> release_no;

  friend bool operator==(const Scope&, const Scope&) = default;
};

/// Outcome of one invariant over a batch. `scope` locates the first violation.
struct Finding {
  std::string id;
  InvariantKind kind = InvariantKind::Requirement;
  Status status = Status::Green;
  Scope scope;
  std::uint64_t violations = 0;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Everything an invariant may inspect.
struct BatchView {
  const ScenarioConfig& config;
  const BatchResult& summary;
  std::span<const RunResult> runs;  // Batch::runs layout

  std::span<const RunResult> runs_of(StrategyKind s) const;
};

/// Counts violations and remembers where the first one happened.
class ViolationSink {
 public:
  void fail(Scope where, std::string detail);
  std::uint64_t count() const noexcept { return count_; }
  const Scope& first_scope() const noexcept { return first_; }
  const std::string& first_detail() const noexcept { return detail_; }

 private:
  std::uint64_t count_ = 0;
  Scope first_;
  std::string detail_;
};

struct Invariant {
  std::string id;
  InvariantKind kind = InvariantKind::Requirement;
  std::string description;
  /// Returns false when the invariant does not apply to this batch.
  std::function<bool(const BatchView&, ViolationSink&)> check;
};

/// Ordered, extensible list of invariants.
class InvariantCatalog {
 public:
  /// The built-in requirements R1-R9 and tendencies T1-T3.
  static InvariantCatalog builtin();

  void add(Invariant inv) { invariants_.push_back(std::move(inv)); }
  std::span<const Invariant> invariants() const noexcept { return invariants_; }

  /// Requirement violations give Red, tendency violations Yellow.
  std::vector<Finding> evaluate(const BatchView& view) const;

 private:
  std::vector<Invariant> invariants_;
};

std::vector<Finding> check_batch(const ScenarioConfig& config, const BatchResult& summary,
                                 std::span<const RunResult> runs);

/// Worst status over all findings (Green when empty).
Status overall_status(std::span<const Finding> findings) noexcept;

}  // namespace schemasim
