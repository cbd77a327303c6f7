#pragma once

// Dense arithmetic kernels with a scalar reference and SIMD variants.
//
// Every variant must produce bit-identical results to the scalar reference:
// only element-wise IEEE operations are vectorised (no reassociation, no FMA),
// so switching the dispatch target never changes simulation output.

#include <span>
#include <string_view>

namespace schemasim::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

/// Variants compiled into this binary and supported by the running CPU.
bool supported(Isa isa) noexcept;

/// The variant picked by the dispatcher. Setting SCHEMASIM_FORCE_SCALAR in the
/// environment pins it to Isa::Scalar.
Isa active_isa() noexcept;

/// values[i] *= factor for all i, through the dispatched variant.
void scale(std::span<double> values, double factor) noexcept;

namespace scalar {
void scale(std::span<double> values, double factor) noexcept;
}

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
/// Caller must check supported(Isa::Avx2) first.
void scale(std::span<double> values, double factor) noexcept;
}
#endif

#if defined(__aarch64__)
namespace neon {
void scale(std::span<double> values, double factor) noexcept;
}
#endif

}  // namespace schemasim::kernels
