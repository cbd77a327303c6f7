#include <gtest/gtest.h>

#include <bit>
#include <vector>

#include "schemasim/kernels.hpp"
#include "schemasim/rng.hpp"

using namespace schemasim;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
  Rng r(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = (r.uniform() - 0.25) * 1e3 * r.uniform();
  return v;
}

void expect_bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(std::bit_cast<std::uint64_t>(a[i]), std::bit_cast<std::uint64_t>(b[i])) << "index " << i;
  }
}

}  // namespace

TEST(Kernels, ScalarScale) {
  std::vector<double> v{1.0, 2.0, 0.0, -4.0};
  kernels::scalar::scale(v, 0.5);
  EXPECT_EQ(v, (std::vector<double>{0.5, 1.0, 0.0, -2.0}));
}

TEST(Kernels, DispatchedMatchesScalarBitForBit) {
  for (std::size_t n : {0, 1, 3, 4, 7, 8, 9, 15, 16, 17, 1000, 1027}) {
    auto expected = random_values(n, n + 1);
    auto actual = expected;
    kernels::scalar::scale(expected, 0.5);
    kernels::scale(actual, 0.5);
    expect_bit_equal(expected, actual);

    kernels::scalar::scale(expected, 0.123456789);
    kernels::scale(actual, 0.123456789);
    expect_bit_equal(expected, actual);
  }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST(Kernels, Avx2MatchesScalarBitForBit) {
  if (!kernels::supported(kernels::Isa::Avx2)) GTEST_SKIP() << "CPU lacks AVX2";
  for (std::size_t n : {0, 2, 5, 8, 13, 64, 333}) {
    auto expected = random_values(n, 77 + n);
    auto actual = expected;
    for (int round = 0; round < 12; ++round) {
      kernels::scalar::scale(expected, 0.5);
      kernels::avx2::scale(actual, 0.5);
    }
    expect_bit_equal(expected, actual);
  }
}
#endif

TEST(Kernels, ActiveIsaIsSupported) {
  EXPECT_TRUE(kernels::supported(kernels::active_isa()));
  EXPECT_TRUE(kernels::supported(kernels::Isa::Scalar));
  EXPECT_FALSE(kernels::to_string(kernels::active_isa()).empty());
}
