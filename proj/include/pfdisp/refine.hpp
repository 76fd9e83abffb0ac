#pragma once

// Post-processing on top of the Max-Min solver: lexicographic (Max-Min, then
// MSN) optimization, local 3-point polishing of greedy selections, and
// k-means/k-medoids seed selection.

#include <cstddef>
#include <span>
#include <vector>

#include "pfdisp/dp_common.hpp"
#include "pfdisp/front.hpp"
#include "pfdisp/oracle.hpp"

namespace pfdisp::refine {

/// Among extreme-anchored selections reaching the optimal Max-Min value,
/// one with maximal MSN value. Runs an MSN DP restricted to consecutive gaps
/// at or above the Max-Min optimum: O(pn^2) time, O(pn) space.
/// cost = Max-Min value, secondary_cost = MSN value.
Selection solve_hierarchic(const SortedFront& front, std::size_t p,
                           const DispersionParams& params, const SolveOptions& options = {});

struct PolishResult {
  std::vector<std::size_t> indices;
  LexCost before;
  LexCost after;
  std::size_t sweeps = 0;
  std::size_t moves = 0;
};

/// Left-to-right sweeps; each interior point b between selected neighbours a
/// and c moves to the index of (a, c) maximizing min(d(a,.), d(., c)) when
/// that strictly improves on b. Stops after a sweep without moves. The input
/// must be strictly increasing and contain 0 and n-1.
PolishResult polish(const SortedFront& front, std::span<const std::size_t> indices,
                    const DispersionParams& params);

enum class SeedStrategy { Direct, Intermediate };

/// Direct: the optimal Max-Min k-selection. Intermediate: the optimal
/// (2k+1)-selection, keeping its points at positions 1, 3, ..., 2k-1.
std::vector<std::size_t> seed_centroids(const SortedFront& front, std::size_t k,
                                        SeedStrategy strategy, const DispersionParams& params,
                                        const SolveOptions& options = {});

}  // namespace pfdisp::refine
