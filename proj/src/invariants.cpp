#include "schemasim/invariants.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "schemasim/store.hpp"

namespace schemasim {

std::string_view to_string(InvariantKind k) noexcept {
  return k == InvariantKind::Requirement ? "requirement" : "tendency";
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Green: return "green";
    case Status::Yellow: return "yellow";
    case Status::Red: return "red";
  }
  return "?";
}

std::span<const RunResult> BatchView::runs_of(StrategyKind s) const {
  const auto& list = summary.strategies;
  const auto it = std::find(list.begin(), list.end(), s);
  if (it == list.end()) return {};
  const auto n = static_cast<std::size_t>(summary.runs);
  return runs.subspan(static_cast<std::size_t>(it - list.begin()) * n, n);
}

void ViolationSink::fail(Scope where, std::string detail) {
  if (count_++ == 0) {
    first_ = where;
    detail_ = std::move(detail);
  }
}

namespace {

Scope at(const RunResult& run, int release_no) { return Scope{run.strategy, run.run_index, release_no}; }

/// Applies `per_release` to every release record of every run of `s`.
/// Returns false when the batch has no runs of `s`.
template <class F>
bool each_release(const BatchView& v, StrategyKind s, F&& per_release) {
  const auto runs = v.runs_of(s);
  for (const auto& run : runs) {
    for (const auto& r : run.releases) per_release(run, r);
  }
  return !runs.empty();
}

bool paired(const BatchView& v, StrategyKind a, StrategyKind b) {
  return !v.runs_of(a).empty() && !v.runs_of(b).empty();
}

void add_builtin(InvariantCatalog& cat) {
  using K = InvariantKind;

  cat.add({"R1", K::Requirement, "eager on-read I/O is 0 in every release",
           [](const BatchView& v, ViolationSink& sink) {
             return each_release(v, StrategyKind::Eager, [&](const RunResult& run, const ReleaseMetrics& r) {
               if (r.on_read_io != 0) sink.fail(at(run, r.release_no), fmt::format("on-read I/O {}", r.on_read_io));
             });
           }});

  cat.add({"R2", K::Requirement, "lazy on-release I/O is 0 in every release",
           [](const BatchView& v, ViolationSink& sink) {
             return each_release(v, StrategyKind::Lazy, [&](const RunResult& run, const ReleaseMetrics& r) {
               if (r.on_release_io != 0) {
                 sink.fail(at(run, r.release_no), fmt::format("on-release I/O {}", r.on_release_io));
               }
             });
           }});

  cat.add({"R3", K::Requirement, "incremental on-release I/O is 0 off the schedule",
           [](const BatchView& v, ViolationSink& sink) {
             return each_release(v, StrategyKind::Incremental, [&](const RunResult& run, const ReleaseMetrics& r) {
               if (!v.config.in_incremental_schedule(r.release_no) && r.on_release_io != 0) {
                 sink.fail(at(run, r.release_no), fmt::format("on-release I/O {}", r.on_release_io));
               } else if (v.config.in_incremental_schedule(r.release_no) && r.stale_count != 0) {
                 sink.fail(at(run, r.release_no), fmt::format("{} stale entities after an increment", r.stale_count));
               }
             });
           }});

  cat.add({"R4", K::Requirement, "population follows the rounded growth path",
           [](const BatchView& v, ViolationSink& sink) {
             const auto path = growth_path(static_cast<std::size_t>(v.config.initial_entities), v.config.growth_rate,
                                           static_cast<std::size_t>(std::max<std::int64_t>(v.config.releases, 0)));
             for (const auto& run : v.runs) {
               for (const auto& r : run.releases) {
                 const auto want = path.at(static_cast<std::size_t>(r.release_no));
                 if (r.population != want) {
                   sink.fail(at(run, r.release_no), fmt::format("population {} expected {}", r.population, want));
                 }
               }
             }
             return !v.runs.empty();
           }});

  cat.add({"R5", K::Requirement, "every entity conforms to its schema version",
           [](const BatchView& v, ViolationSink& sink) {
             for (const auto& run : v.runs) {
               for (const auto& r : run.releases) {
                 if (r.conformance_violations != 0) {
                   sink.fail(at(run, r.release_no), fmt::format("{} non-conforming", r.conformance_violations));
                 }
               }
             }
             return !v.runs.empty();
           }});

  cat.add({"R6", K::Requirement, "cumulated I/O and cost are running sums",
           [](const BatchView& v, ViolationSink& sink) {
             for (const auto& run : v.runs) {
               std::uint64_t io = 0;
               Money cost;
               for (const auto& r : run.releases) {
                 io += r.on_read_io + r.on_release_io;
                 cost += r.on_read_cost + r.on_release_cost;
                 if (r.cumulated_io != io || r.cumulated_cost != cost) {
                   sink.fail(at(run, r.release_no), "cumulated totals diverge from the running sum");
                 }
               }
             }
             return !v.runs.empty();
           }});

  cat.add({"R7", K::Requirement, "money equals io x scale / 10^6 x price",
           [](const BatchView& v, ViolationSink& sink) {
             const auto& c = v.config;
             for (const auto& run : v.runs) {
               for (const auto& r : run.releases) {
                 if (r.on_read_cost != money(r.on_read_io, c.price_per_million_io, c.scale_factor) ||
                     r.on_release_cost != money(r.on_release_io, c.price_per_million_io, c.scale_factor) ||
                     r.cumulated_cost != money(r.cumulated_io, c.price_per_million_io, c.scale_factor)) {
                   sink.fail(at(run, r.release_no), "cost differs from the I/O count");
                 }
               }
             }
             return !v.runs.empty();
           }});

  cat.add({"R8", K::Requirement, "paired final cumulated cost: lazy <= incremental, predictive <= eager",
           [](const BatchView& v, ViolationSink& sink) {
             const auto eager = v.runs_of(StrategyKind::Eager);
             const auto lazy = v.runs_of(StrategyKind::Lazy);
             if (eager.empty() || lazy.empty()) return false;
             auto final_cost = [](const RunResult& r) { return r.releases.empty() ? Money{} : r.releases.back().cumulated_cost; };
             for (StrategyKind mid : {StrategyKind::Incremental, StrategyKind::Predictive}) {
               const auto between = v.runs_of(mid);
               for (std::size_t i = 0; i < between.size(); ++i) {
                 const Money lo = final_cost(lazy[i]);
                 const Money x = final_cost(between[i]);
                 const Money hi = final_cost(eager[i]);
                 if (!(lo <= x && x <= hi)) {
                   sink.fail(Scope{mid, between[i].run_index, std::nullopt},
                             fmt::format("lazy {} / {} {} / eager {} USD", lo.usd(), to_string(mid), x.usd(), hi.usd()));
                 }
               }
             }
             return true;
           }});

  cat.add({"R9", K::Requirement, "every eager access costs exactly the base latency",
           [](const BatchView& v, ViolationSink& sink) {
             if (v.config.latency_jitter_ms > 0.0) return false;
             const double base = v.config.latency_base_ms;
             return each_release(v, StrategyKind::Eager, [&](const RunResult& run, const ReleaseMetrics& r) {
               if (!r.latency.empty && (r.latency.max != base || r.latency.median != base)) {
                 sink.fail(at(run, r.release_no), fmt::format("max latency {} ms", r.latency.max));
               }
             });
           }});

  auto latency_le = [](StrategyKind low, StrategyKind high) {
    return [low, high](const BatchView& v, ViolationSink& sink) {
      if (!paired(v, low, high)) return false;
      const auto a = v.runs_of(low);
      const auto b = v.runs_of(high);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t r = 0; r < a[i].releases.size(); ++r) {
          const auto& x = a[i].releases[r].latency;
          const auto& y = b[i].releases[r].latency;
          if (!x.empty && !y.empty && x.mean > y.mean) {
            sink.fail(Scope{high, b[i].run_index, b[i].releases[r].release_no},
                      fmt::format("{} {} ms > {} {} ms", to_string(low), x.mean, to_string(high), y.mean));
          }
        }
      }
      return true;
    };
  };

  cat.add({"T1", K::Tendency, "per-release mean latency of eager is the lowest",
           [latency_le](const BatchView& v, ViolationSink& sink) {
             bool any = false;
             for (StrategyKind s : {StrategyKind::Incremental, StrategyKind::Predictive, StrategyKind::Lazy}) {
               any = latency_le(StrategyKind::Eager, s)(v, sink) || any;
             }
             return any;
           }});

  cat.add({"T2", K::Tendency, "per-release mean latency: predictive <= lazy",
           latency_le(StrategyKind::Predictive, StrategyKind::Lazy)});

  cat.add({"T3", K::Tendency, "prediction_fraction = 0 reproduces lazy I/O",
           [](const BatchView& v, ViolationSink& sink) {
             if (v.config.prediction_fraction != 0.0 || !paired(v, StrategyKind::Predictive, StrategyKind::Lazy)) {
               return false;
             }
             const auto p = v.runs_of(StrategyKind::Predictive);
             const auto l = v.runs_of(StrategyKind::Lazy);
             for (std::size_t i = 0; i < p.size(); ++i) {
               for (std::size_t r = 0; r < p[i].releases.size(); ++r) {
                 const auto& a = p[i].releases[r];
                 const auto& b = l[i].releases[r];
                 if (a.on_read != b.on_read || a.on_release != b.on_release) {
                   sink.fail(at(p[i], a.release_no), "I/O differs from lazy");
                 }
               }
             }
             return true;
           }});
}

}  // namespace

InvariantCatalog InvariantCatalog::builtin() {
  InvariantCatalog cat;
  add_builtin(cat);
  return cat;
}

std::vector<Finding> InvariantCatalog::evaluate(const BatchView& view) const {
  std::vector<Finding> out;
  for (const auto& inv : invariants_) {
    ViolationSink sink;
    Finding f;
    f.id = inv.id;
    f.kind = inv.kind;
    const bool applied = inv.check(view, sink);
    f.violations = sink.count();
    if (!applied) {
      f.message = fmt::format("{}: not applicable to this batch", inv.description);
    } else if (sink.count() == 0) {
      f.message = inv.description;
    } else {
      f.status = inv.kind == InvariantKind::Requirement ? Status::Red : Status::Yellow;
      f.scope = sink.first_scope();
      f.message = fmt::format("{}: {} violation(s), first: {}", inv.description, sink.count(), sink.first_detail());
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> check_batch(const ScenarioConfig& config, const BatchResult& summary,
                                 std::span<const RunResult> runs) {
  return InvariantCatalog::builtin().evaluate(BatchView{config, summary, runs});
}

Status overall_status(std::span<const Finding> findings) noexcept {
  Status worst = Status::Green;
  for (const auto& f : findings) worst = std::max(worst, f.status);
  return worst;
}

}  // namespace schemasim
