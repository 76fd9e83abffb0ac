#include <gtest/gtest.h>

#include <cstring>

#include "pfdisp/kernels.hpp"
#include "pfdisp/maxmin.hpp"
#include "support.hpp"

namespace pfdisp {
namespace {

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

TEST(MaxMinCrossing, MatchesScan) {
  test::Rng rng(5);
  std::uniform_int_distribution<int> step(0, 3);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t len = test::uniform(rng, 1, 25);
    std::vector<double> up(len);
    std::vector<double> down(len);
    up[0] = step(rng);
    down[len - 1] = step(rng);
    for (std::size_t j = 1; j < len; ++j) up[j] = up[j - 1] + step(rng);
    for (std::size_t j = len - 1; j-- > 0;) down[j] = down[j + 1] + step(rng);
    const std::size_t lo = test::uniform(rng, 0, len - 1);
    const std::size_t hi = test::uniform(rng, lo, len - 1);

    double best = kInfeasible;
    std::size_t arg = lo;
    for (std::size_t j = lo; j <= hi; ++j) {
      const double v = std::min(up[j], down[j]);
      if (v > best) {
        best = v;
        arg = j;
      }
    }
    const auto got = max_min_crossing(
        lo, hi, [&](std::size_t j) { return up[j]; }, [&](std::size_t j) { return down[j]; });
    ASSERT_EQ(got.value, best);
    ASSERT_EQ(std::min(up[got.index], down[got.index]), best);
    // Smallest index among the two straddling candidates; plateaus may hold
    // earlier ties, which the value check above already covers.
    ASSERT_GE(got.index, arg);
  }
}

TEST(Triangle, IndexIsDenseAndColumnMajor) {
  const std::size_t n = 9;
  std::vector<int> hit(triangle_size(n), 0);
  std::size_t expect = 0;
  for (std::size_t b = 1; b < n; ++b)
    for (std::size_t a = 0; a < b; ++a) {
      ASSERT_EQ(triangle_index(a, b), expect++);
      ++hit[triangle_index(a, b)];
    }
  for (int h : hit) EXPECT_EQ(h, 1);
}

TEST(Kernels, MaxMinCellMatchesNaiveEverywhere) {
  test::Rng rng(17);
  for (int round = 0; round < 40; ++round) {
    const auto f = test::random_front(rng, test::uniform(rng, 3, 150));
    const DispersionParams params(test::pick_alpha(rng));
    const Distance d(f, params);
    const std::size_t p = std::min<std::size_t>(f.size(), test::uniform(rng, 3, 10));
    auto layer = maxmin::initial_layer(f, params);
    for (std::size_t k = 3; k <= p; ++k) {
      for (std::size_t i = k - 1; i < f.size(); ++i) {
        ASSERT_EQ(kernels::maxmin_cell(layer.values, i, k, d),
                  kernels::maxmin_cell_naive(layer.values, i, k, d));
      }
      layer = maxmin::next_layer(layer, f, params);
    }
  }
}

// Runs one layer kernel through the serial reference and the OpenMP kernel
// at several thread counts and requires identical bits.
class ParallelLayers : public ::testing::TestWithParam<int> {};

TEST_P(ParallelLayers, BitwiseEqualToSerial) {
  const int threads = GetParam();
  test::Rng rng(100 + threads);
  for (int round = 0; round < 12; ++round) {
    const std::size_t n = test::uniform(rng, 4, 300);
    const auto f = test::random_front(rng, n);
    const DispersionParams params(test::pick_alpha(rng));
    const Distance d(f, params);

    std::vector<double> row(n);
    row[0] = kInfeasible;
    for (std::size_t i = 1; i < n; ++i) row[i] = d(0, i);
    const std::size_t k = test::uniform(rng, 3, std::min<std::size_t>(n, 8));
    std::vector<double> a(n);
    std::vector<double> b(n);

    kernels::serial::maxmin_layer(row, a, k, d);
    kernels::parallel::maxmin_layer(row, b, k, d, threads);
    ASSERT_TRUE(bitwise_equal(a, b));

    kernels::serial::msn_layer(row, a, k, d);
    kernels::parallel::msn_layer(row, b, k, d, threads);
    ASSERT_TRUE(bitwise_equal(a, b));

    const double floor = d(0, n - 1) / double(k);
    kernels::serial::msn_gapped_layer(row, a, k, d, floor);
    kernels::parallel::msn_gapped_layer(row, b, k, d, floor, threads);
    ASSERT_TRUE(bitwise_equal(a, b));

    if (n > 120) continue;
    std::vector<double> tri(triangle_size(n), kInfeasible);
    for (std::size_t c = 1; c < n; ++c) tri[triangle_index(0, c)] = d(0, c);
    std::vector<double> ta(tri.size());
    std::vector<double> tb(tri.size());
    kernels::serial::msm_layer(tri, ta, 3, d);
    kernels::parallel::msm_layer(tri, tb, 3, d, threads);
    ASSERT_TRUE(bitwise_equal(ta, tb));
    if (n >= 4) {
      kernels::serial::msm_layer(ta, tri, 4, d);
      kernels::parallel::msm_layer(ta, tb, 4, d, threads);
      ASSERT_TRUE(bitwise_equal(tri, tb));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Threads, ParallelLayers, ::testing::Values(1, 2, 3, 4, 7));

TEST(Kernels, MsnCellArgmaxIsSmallestTie) {
  // Collinear front: every predecessor gives the same sum.
  const auto f = test::front_a();
  const Distance d(f, {});
  std::vector<double> row{kInfeasible, d(0, 1), d(0, 2), d(0, 3)};
  std::size_t arg = 99;
  const double v = kernels::msn_cell(row, 3, 3, d, &arg);
  EXPECT_NEAR(v, d(0, 3), 1e-12);
  EXPECT_EQ(arg, 1u);
}

TEST(Kernels, ResolveThreads) {
  EXPECT_EQ(resolve_threads(3), 3);
  EXPECT_EQ(resolve_threads(0), available_threads());
  EXPECT_GE(available_threads(), 1);
}

}  // namespace
}  // namespace pfdisp
