#include <gtest/gtest.h>

#include "schemasim/costing.hpp"

using namespace schemasim;

TEST(Costing, MoneyExamples) {
  EXPECT_EQ(money(0, 0.2, 10000).pico, 0);
  EXPECT_DOUBLE_EQ(money(666, 0.2, 10000).usd(), 1.332);
  EXPECT_DOUBLE_EQ(money(1667, 0.2, 10000).usd(), 3.334);
  EXPECT_EQ(money(666, 0.2, 10000).pico, 1'332'000'000'000);
}

TEST(Costing, MoneyIsLinear) {
  for (std::uint64_t a : {0ULL, 1ULL, 7ULL, 666ULL, 123457ULL}) {
    for (std::uint64_t b : {0ULL, 3ULL, 1667ULL, 99991ULL}) {
      EXPECT_EQ(money(a + b, 0.2, 10000), money(a, 0.2, 10000) + money(b, 0.2, 10000));
      EXPECT_EQ(money(a + b, 0.37, 3), money(a, 0.37, 3) + money(b, 0.37, 3));
    }
  }
}

TEST(Costing, LatencyModel) {
  const ScenarioConfig c;
  EXPECT_EQ(access_latency(0, 0, c), 4.2);
  EXPECT_DOUBLE_EQ(access_latency(2, 0, c), 6.8);
  EXPECT_DOUBLE_EQ(access_latency(1, 1, c), 4.2 + 1.3 + 2.6);
}

TEST(Costing, ReleaseLatencyStats) {
  const std::vector<double> constant(10, 4.2);
  const auto a = release_latency_stats(constant);
  EXPECT_FALSE(a.empty);
  EXPECT_EQ(a.mean, 4.2);
  EXPECT_EQ(a.median, 4.2);
  EXPECT_EQ(a.p75, 4.2);
  EXPECT_EQ(a.max, 4.2);

  const auto b = release_latency_stats(std::vector<double>{4.2, 4.2, 6.8, 9.4});
  EXPECT_DOUBLE_EQ(b.mean, 6.15);
  EXPECT_DOUBLE_EQ(b.median, 5.5);
  EXPECT_DOUBLE_EQ(b.max, 9.4);

  const auto e = release_latency_stats(std::vector<double>{});
  EXPECT_TRUE(e.empty);
  EXPECT_EQ(e.mean, 0.0);
}

TEST(Costing, LedgerBuckets) {
  IoLedger l;
  EXPECT_THROW(l.charge(Bucket::OnRead, 1, 1), ConsistencyError);
  l.begin_release(1);
  l.charge(Bucket::OnRead, 2, 1);
  l.charge(Bucket::OnRead, 1, 1);
  l.charge(Bucket::OnRelease, 5, 4);
  EXPECT_EQ(l.current().on_read, (IoCounts{3, 2}));
  EXPECT_EQ(l.current().on_release, (IoCounts{5, 4}));
  EXPECT_THROW(l.charge(Bucket::OnRead, 1, 0), ConsistencyError);

  l.begin_release(2);
  EXPECT_NO_THROW(l.charge(Bucket::OnRead, 1, 1));
  EXPECT_EQ(l.releases().size(), 2U);
  EXPECT_THROW(l.begin_release(4), ConsistencyError);
}
