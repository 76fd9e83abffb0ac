#include <gtest/gtest.h>

#include <cmath>

#include "pfdisp/msn.hpp"
#include "support.hpp"

namespace pfdisp {
namespace {

using Idx = std::vector<std::size_t>;

TEST(Msn, FrontC) {
  const auto s = msn::solve(test::front_c(), 3, {});
  EXPECT_EQ(s.indices, (Idx{0, 1, 3}));
  EXPECT_NEAR(s.cost, std::sqrt(5.0) + 5, 1e-12);
  EXPECT_NEAR(msn::solve_value_only(test::front_c(), 3, {}), std::sqrt(5.0) + 5, 1e-12);
}

TEST(Msn, CollinearTieGoesToSmallestIndices) {
  for (bool fast : {true, false}) {
    const auto s = msn::solve(test::front_a(), 3, {}, {{}, fast});
    EXPECT_EQ(s.indices, (Idx{0, 1, 3}));
    EXPECT_NEAR(s.cost, std::sqrt(50.0), 1e-12);
  }
}

TEST(Msn, PTwoIsTheExtremes) {
  test::Rng rng(12);
  const auto f = test::random_front(rng, 17);
  EXPECT_EQ(msn::solve(f, 2, {}).indices, (Idx{0, 16}));
}

TEST(Msn, MatchesEnumerationAndContainsExtremes) {
  test::Rng rng(31);
  for (int round = 0; round < 300; ++round) {
    const auto f = test::random_front(rng, test::uniform(rng, 2, 13));
    const std::size_t p = test::uniform(rng, 2, std::min<std::size_t>(7, f.size()));
    const DispersionParams params(test::pick_alpha(rng));
    const double ref = brute_force(f, p, Variant::MaxSumNeighbor, params).cost;
    for (bool fast : {true, false}) {
      const auto s = msn::solve(f, p, params, {{}, fast});
      ASSERT_TRUE(test::same_value(s.cost, ref));
      ASSERT_EQ(s.cost, dispersion_cost(f, s.indices, Variant::MaxSumNeighbor, params));
      ASSERT_EQ(s.indices.front(), 0u);
      ASSERT_EQ(s.indices.back(), f.size() - 1);
      ASSERT_TRUE(test::same_value(msn::solve_value_only(f, p, params, {{}, fast}), ref));
    }
  }
}

TEST(Msn, TableRows) {
  test::Rng rng(1);
  const auto f = test::random_front(rng, 40);
  const auto t = msn::build_table(f, 6, {});
  EXPECT_EQ(t.cell_count(), 4 * f.size());
  const Distance d(f, {});
  for (std::size_t i = 1; i < f.size(); ++i) EXPECT_EQ(t.row(2)[i], d(0, i));
  for (std::size_t k = 3; k < 6; ++k) {
    for (std::size_t i = 0; i + 1 < k; ++i) EXPECT_EQ(t.row(k)[i], kInfeasible);
    EXPECT_EQ(t.row(k)[f.size() - 1], kernels::msn_cell(t.row(k - 1), f.size() - 1, k, d));
  }
}

TEST(Msn, LiveCells) {
  test::Rng rng(2);
  const auto f = test::random_front(rng, 400);
  const std::size_t p = 10;
  DpStats stats;
  msn::solve(f, p, {}, {{}, true, &stats});
  EXPECT_LE(stats.peak_cells, p * f.size());
  msn::solve_value_only(f, p, {}, {{}, true, &stats});
  EXPECT_LE(stats.peak_cells, 2 * f.size());
}

TEST(Msn, ThreadCountDoesNotChangeTheResult) {
  test::Rng rng(3);
  const auto f = test::random_front(rng, 700);
  const auto a = msn::solve(f, 8, {}, {{1}});
  const auto b = msn::solve(f, 8, {}, {{4}});
  EXPECT_EQ(a.indices, b.indices);
  EXPECT_EQ(a.cost, b.cost);
}

}  // namespace
}  // namespace pfdisp
