#pragma once

#include <cstdint>
#include <string_view>

namespace schemasim {

/// Counter-based SplitMix64 generator.
///
/// The state is a counter advanced by a fixed odd increment and each output is
/// a bijective mix of the counter, so a stream is a pure function of its seed
/// and draw index. No std:: distributions are used anywhere in the simulator:
/// their algorithms are implementation-defined and would break cross-platform
/// reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Uniform integer in [0, n). Lemire's multiply-shift with rejection, so the
  /// result is unbiased. Requires n > 0.
  std::uint64_t below(std::uint64_t n) noexcept;

  bool bernoulli(double p) noexcept { return uniform() < p; }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

/// The SplitMix64 finalizer (a bijection on 64-bit words).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// FNV-1a over the bytes of `text`.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Seed of child `index` of `parent` (e.g. run seeds of a master seed).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept;

/// Seed of the named substream of `parent` ("population", "workload", ...).
std::uint64_t derive_stream_seed(std::uint64_t parent, std::string_view label) noexcept;

}  // namespace schemasim
