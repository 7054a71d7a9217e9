#include "udecide/rng.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

namespace udecide {
namespace {

TEST(RngStreamTest, PureFunctionOfCoordinates) {
  RngStream a(42, 3, 1000);
  RngStream b(42, 3, 1000);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_EQ(a.position(), 100u);
}

TEST(RngStreamTest, CoordinatesSeparateStreams) {
  const std::uint64_t base = RngStream(42, 3, 1000).next_u64();
  EXPECT_NE(base, RngStream(43, 3, 1000).next_u64());
  EXPECT_NE(base, RngStream(42, 4, 1000).next_u64());
  EXPECT_NE(base, RngStream(42, 3, 1001).next_u64());
  // Swapping stream and counter must not alias.
  EXPECT_NE(RngStream(1, 2, 3).next_u64(), RngStream(1, 3, 2).next_u64());
}

TEST(RngStreamTest, NoCollisionsAcrossNeighbouringCells) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 64; ++s) {
    for (std::uint64_t c = 0; c < 256; ++c) {
      RngStream r(7, s, c);
      for (int i = 0; i < 4; ++i) EXPECT_TRUE(seen.insert(r.next_u64()).second);
    }
  }
}

TEST(RngStreamTest, Uniform01Range) {
  RngStream r(1, 0, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = r.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

// Pearson chi-square over 100 equal bins; 148.23 is the 0.999 quantile of
// chi-square with 99 degrees of freedom.
double chi_square_uniform(RngStream& rng, int draws) {
  std::array<int, 100> bins{};
  for (int i = 0; i < draws; ++i) ++bins[static_cast<int>(rng.uniform01() * 100)];
  const double expected = draws / 100.0;
  double chi2 = 0.0;
  for (int b : bins) chi2 += (b - expected) * (b - expected) / expected;
  return chi2;
}

TEST(RngStreamTest, ChiSquareWithinOneStream) {
  RngStream r(42, 0, 0);
  EXPECT_LT(chi_square_uniform(r, 1'000'000), 148.23);
}

TEST(RngStreamTest, ChiSquareAcrossCounters) {
  // First draw of consecutive trials, the access pattern of the simulator.
  std::array<int, 100> bins{};
  const int n = 1'000'000;
  for (int c = 0; c < n; ++c) {
    RngStream r(42, 9, static_cast<std::uint64_t>(c));
    ++bins[static_cast<int>(r.uniform01() * 100)];
  }
  double chi2 = 0.0;
  for (int b : bins) chi2 += (b - n / 100.0) * (b - n / 100.0) / (n / 100.0);
  EXPECT_LT(chi2, 148.23);
}

TEST(RngStreamTest, LagOneCorrelationIsSmall) {
  RngStream r(5, 5, 5);
  const int n = 200000;
  double prev = r.uniform01(), sxy = 0, sx = 0, sxx = 0;
  for (int i = 0; i < n; ++i) {
    const double x = r.uniform01();
    sxy += prev * x;
    sx += x;
    sxx += x * x;
    prev = x;
  }
  const double mean = sx / n;
  const double corr = (sxy / n - mean * mean) / (sxx / n - mean * mean);
  EXPECT_LT(std::fabs(corr), 4.0 / std::sqrt(n));
}

}  // namespace
}  // namespace udecide
