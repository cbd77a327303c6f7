#include "schemasim/costing.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "schemasim/stats.hpp"

namespace schemasim {

void IoLedger::begin_release(int release_no) {
  if (!releases_.empty() && release_no != releases_.back().release_no + 1) {
    throw ConsistencyError(fmt::format("release {} opened after {}", release_no, releases_.back().release_no));
  }
  releases_.push_back(ReleaseIo{release_no, {}, {}});
  release_phase_ = false;
}

void IoLedger::charge(Bucket bucket, std::uint64_t reads, std::uint64_t writes) {
  if (releases_.empty()) throw ConsistencyError("I/O charged outside a release");
  auto& r = releases_.back();
  if (bucket == Bucket::OnRelease) {
    release_phase_ = true;
    r.on_release += IoCounts{reads, writes};
  } else {
    if (release_phase_) {
      throw ConsistencyError(fmt::format("on-read charge after on-release charges in release {}", r.release_no));
    }
    r.on_read += IoCounts{reads, writes};
  }
}

const ReleaseIo& IoLedger::current() const {
  if (releases_.empty()) throw ConsistencyError("no open release");
  return releases_.back();
}

std::int64_t price_micro_usd(double price_per_million_io) {
  return std::llround(price_per_million_io * 1e6);
}

Money money(std::uint64_t io_count, double price_per_million_io, std::int64_t scale_factor) {
  const auto pico = static_cast<__int128>(io_count) * scale_factor * price_micro_usd(price_per_million_io);
  return Money{static_cast<std::int64_t>(pico)};
}

double access_latency(std::uint64_t single_steps, std::uint64_t multi_dest_steps,
                      const ScenarioConfig& config) {
  return config.latency_base_ms + static_cast<double>(single_steps) * config.latency_single_ms +
         static_cast<double>(multi_dest_steps) * config.latency_multi_ms;
}

LatencyStats release_latency_stats(std::span<const double> latencies_ms) {
  if (latencies_ms.empty()) return {};
  std::vector<double> sorted(latencies_ms.begin(), latencies_ms.end());
  std::sort(sorted.begin(), sorted.end());
  LatencyStats s;
  s.mean = mean_of(sorted);
  s.median = quantile_sorted(sorted, 0.5);
  s.p75 = quantile_sorted(sorted, 0.75);
  s.max = sorted.back();
  s.empty = false;
  return s;
}

}  // namespace schemasim
