#include "schemasim/kernels.hpp"

#include <cstdlib>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace schemasim::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "?";
}

namespace scalar {
void scale(std::span<double> values, double factor) noexcept {
  for (double& v : values) v *= factor;
}
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
__attribute__((target("avx2"))) void scale(std::span<double> values, double factor) noexcept {
  double* p = values.data();
  const std::size_t n = values.size();
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), f));
    _mm256_storeu_pd(p + i + 4, _mm256_mul_pd(_mm256_loadu_pd(p + i + 4), f));
  }
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), f));
  }
  for (; i < n; ++i) p[i] *= factor;
}
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void scale(std::span<double> values, double factor) noexcept {
  double* p = values.data();
  const std::size_t n = values.size();
  const float64x2_t f = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(p + i, vmulq_f64(vld1q_f64(p + i), f));
  for (; i < n; ++i) p[i] *= factor;
}
}  // namespace neon
#endif

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

namespace {

using ScaleFn = void (*)(std::span<double>, double) noexcept;

struct Dispatch {
  Isa isa = Isa::Scalar;
  ScaleFn scale = &scalar::scale;
};

Dispatch resolve() noexcept {
  Dispatch d;
  if (std::getenv("SCHEMASIM_FORCE_SCALAR") != nullptr) return d;
#if defined(__x86_64__) || defined(_M_X64)
  if (supported(Isa::Avx2)) {
    d.isa = Isa::Avx2;
    d.scale = &avx2::scale;
  }
#elif defined(__aarch64__)
  d.isa = Isa::Neon;
  d.scale = &neon::scale;
#endif
  return d;
}

const Dispatch& dispatch() noexcept {
  static const Dispatch d = resolve();
  return d;
}

}  // namespace

Isa active_isa() noexcept { return dispatch().isa; }

void scale(std::span<double> values, double factor) noexcept { dispatch().scale(values, factor); }

}  // namespace schemasim::kernels
