#pragma once

// Exact Max-Min p-dispersion on a sorted 2d front in O(pn log n) time and
// O(n) space.
//
// C(k, i) = max over j in [k-2, i-1] of min(C(k-1, j), d(j, i)), with
// C(2, i) = d(0, i). Every row is nondecreasing in i while d(., i) is
// decreasing, so each cell is a crossing search (max_min_crossing). Only two
// rows are alive at any time; the selection is rebuilt from the optimum by a
// greedy walk instead of a stored table.

#include <cstddef>
#include <vector>

#include "pfdisp/dp_common.hpp"
#include "pfdisp/front.hpp"
#include "pfdisp/oracle.hpp"

namespace pfdisp::maxmin {

enum class Backtrack { MinIndexes, MaxIndexes };

struct Options : SolveOptions {
  Backtrack backtrack = Backtrack::MinIndexes;
};

/// Row k = 2: d(0, i), infeasible at i = 0.
DpLayer initial_layer(const SortedFront& front, const DispersionParams& params);

/// Row prev.k + 1 from prev.
DpLayer next_layer(const DpLayer& prev, const SortedFront& front,
                   const DispersionParams& params, const ExecPolicy& exec = {});

/// Cell C(prev.k + 1, i); kInfeasible when i < prev.k.
double bellman_cell(const DpLayer& prev, std::size_t i, const SortedFront& front,
                    const DispersionParams& params);

/// Optimal value only.
double optimal_value(const SortedFront& front, std::size_t p, const DispersionParams& params,
                     const Options& options = {});

Selection solve(const SortedFront& front, std::size_t p, const DispersionParams& params,
                const Options& options = {});

/// Greedy reconstruction from the optimal value: MinIndexes walks forward
/// from 0 taking the smallest index at distance >= opt, MaxIndexes walks
/// backward from n-1 taking the largest. O(p log n). Throws
/// InconsistentOptimum when opt is not achievable.
std::vector<std::size_t> backtrack_greedy(const SortedFront& front, std::size_t p, double opt,
                                          const DispersionParams& params, Backtrack direction);

/// Bounds on the positions of any optimal selection containing 0 and n-1.
struct IndexBounds {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
};

IndexBounds index_bounds(const SortedFront& front, std::size_t p, double opt,
                         const DispersionParams& params);

}  // namespace pfdisp::maxmin
