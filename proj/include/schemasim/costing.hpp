#pragma once

// I/O bookkeeping, money conversion and the access latency model.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schemasim/domain.hpp"

namespace schemasim {

enum class Bucket : std::uint8_t { OnRead, OnRelease };

struct IoCounts {
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;

  std::uint64_t total() const noexcept { return reads + writes; }
  IoCounts& operator+=(const IoCounts& o) noexcept {
    reads += o.reads;
    writes += o.writes;
    return *this;
  }
  friend bool operator==(const IoCounts&, const IoCounts&) = default;
};

struct ReleaseIo {
  int release_no = 0;
  IoCounts on_read;
  IoCounts on_release;
};

/// Append-only per-release I/O record. Within a release every on-read charge
/// must come before the first on-release charge.
class IoLedger {
 public:
  void begin_release(int release_no);
  /// Throws ConsistencyError when no release is open or when an on-read
  /// charge follows an on-release charge of the same release.
  void charge(Bucket bucket, std::uint64_t reads, std::uint64_t writes);

  const ReleaseIo& current() const;
  std::span<const ReleaseIo> releases() const noexcept { return releases_; }

 private:
  std::vector<ReleaseIo> releases_;
  bool release_phase_ = false;
};

/// Money in integer pico-USD. Sums are exact.
struct Money {
  std::int64_t pico = 0;

  double usd() const noexcept { return static_cast<double>(pico) * 1e-12; }
  Money& operator+=(Money o) noexcept {
    pico += o.pico;
    return *this;
  }
  friend Money operator+(Money a, Money b) noexcept { return a += b; }
  friend auto operator<=>(const Money&, const Money&) = default;
};

/// Price per million I/O requests rounded to whole micro-USD.
std::int64_t price_micro_usd(double price_per_million_io);

/// io x scale / 10^6 x price, i.e. io x scale x price_micro_usd pico-USD.
Money money(std::uint64_t io_count, double price_per_million_io, std::int64_t scale_factor);

/// base + single_steps x single_ms + multi_dest_steps x multi_ms.
double access_latency(std::uint64_t single_steps, std::uint64_t multi_dest_steps,
                      const ScenarioConfig& config);

struct LatencyStats {
  double mean = 0.0;
  double median = 0.0;
  double p75 = 0.0;
  double max = 0.0;
  bool empty = true;

  friend bool operator==(const LatencyStats&, const LatencyStats&) = default;
};

/// Statistics over one release's access latencies; all zero with `empty` set
/// for a release without accesses.
LatencyStats release_latency_stats(std::span<const double> latencies_ms);

struct ReleaseMetrics {
  int release_no = 0;

  IoCounts on_read;
  IoCounts on_release;
  std::uint64_t on_read_io = 0;
  std::uint64_t on_release_io = 0;
  std::uint64_t cumulated_io = 0;

  Money on_read_cost;
  Money on_release_cost;
  Money cumulated_cost;

  LatencyStats latency;
  std::uint64_t access_count = 0;

  std::uint64_t population = 0;
  std::uint64_t stale_count = 0;
  std::uint64_t conformance_violations = 0;

  std::optional<Smo> smo;

  friend bool operator==(const ReleaseMetrics&, const ReleaseMetrics&) = default;
};

}  // namespace schemasim
