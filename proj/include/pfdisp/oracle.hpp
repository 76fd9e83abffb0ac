#pragma once

// Ground-truth dispersion costs for the five variants and brute-force exact
// solvers for small fronts. Every DP solver is checked against this module.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfdisp/front.hpp"
#include "pfdisp/ties.hpp"

namespace pfdisp {

enum class Variant { MaxMin, MaxSum, MaxSumMin, MaxMinSum, MaxSumNeighbor };

inline constexpr Variant kAllVariants[] = {Variant::MaxMin, Variant::MaxSumNeighbor,
                                           Variant::MaxSumMin, Variant::MaxSum,
                                           Variant::MaxMinSum};

/// Spellings: max-min, max-sum, max-sum-min, max-min-sum, max-sum-neighbor.
std::string to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

enum class Method { BruteForce, DP, Greedy, Hierarchic, Polished };

std::string to_string(Method m);

struct Selection {
  Variant variant = Variant::MaxMin;
  std::size_t p = 0;
  std::vector<std::size_t> indices;  // strictly increasing, sorted-front positions
  double cost = 0.0;
  Method method = Method::DP;
  std::optional<double> secondary_cost;  // MSN value for hierarchic/polished results
};

/// Lexicographic (Max-Min, then MSN) objective.
struct LexCost {
  double primary = 0.0;
  double secondary = 0.0;

  /// Strict lexicographic improvement, primary compared with tie tolerance.
  bool better_than(const LexCost& other) const noexcept {
    if (strictly_better(primary, other.primary)) return true;
    if (strictly_better(other.primary, primary)) return false;
    return strictly_better(secondary, other.secondary);
  }
};

/// Dispersion value of a selection. MaxMin and MaxSumMin use the
/// consecutive-pair form valid on a sorted front.
double dispersion_cost(const SortedFront& front, std::span<const std::size_t> indices,
                       Variant variant, const DispersionParams& params);

/// All-pairs definitions of Max-Min and Max-Sum-Min (no use of the order).
double max_min_all_pairs(const SortedFront& front, std::span<const std::size_t> indices,
                         const DispersionParams& params);
double max_sum_min_all_pairs(const SortedFront& front, std::span<const std::size_t> indices,
                             const DispersionParams& params);

inline constexpr double kEnumerationBudget = 1e8;

/// Exact optimum by enumeration. fix_extremes restricts to selections
/// containing 0 and n-1. Ties go to the lexicographically smallest indices.
Selection brute_force(const SortedFront& front, std::size_t p, Variant variant,
                      const DispersionParams& params, bool fix_extremes = false);

/// Every selection whose cost ties the optimum.
std::vector<std::vector<std::size_t>> all_optima(const SortedFront& front, std::size_t p,
                                                 Variant variant, const DispersionParams& params,
                                                 bool fix_extremes = false);

/// Best MSN value among the Max-Min optima. anchored restricts the search to
/// selections containing both extremes.
Selection lex_brute_force(const SortedFront& front, std::size_t p,
                          const DispersionParams& params, bool anchored = false);

/// Calls visit(indices) for each p-subset in lexicographic order; stops early
/// when visit returns false.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t p, bool fix_extremes, Visit&& visit) {
  std::vector<std::size_t> idx(p);
  if (fix_extremes) {
    if (p < 2 || p > n) return;
    idx.front() = 0;
    idx.back() = n - 1;
    const std::size_t free = p - 2;
    for (std::size_t t = 0; t < free; ++t) idx[t + 1] = t + 1;
    while (true) {
      if (!visit(std::span<const std::size_t>(idx))) return;
      // Advance the interior slots 1..p-2 over values 1..n-2.
      std::size_t t = free;
      while (t > 0 && idx[t] == n - 2 - (free - t)) --t;
      if (t == 0) return;
      ++idx[t];
      for (std::size_t u = t + 1; u <= free; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  if (p == 0 || p > n) return;
  for (std::size_t t = 0; t < p; ++t) idx[t] = t;
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return;
    std::size_t t = p;
    while (t > 0 && idx[t - 1] == n - p + (t - 1)) --t;
    if (t == 0) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < p; ++u) idx[u] = idx[u - 1] + 1;
  }
}

/// C(n, k) as a double (exact enough for budget checks).
double binomial(std::size_t n, std::size_t k);

}  // namespace pfdisp
