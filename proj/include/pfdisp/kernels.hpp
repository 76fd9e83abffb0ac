#pragma once

// Layer kernels of the Bellman recurrences.
//
// Each kernel computes DP row k from the finished row k-1. Cells within a row
// only read row k-1 and are each written by exactly one worker, so the
// OpenMP kernels produce bitwise the same rows as the serial references in
// pfdisp::kernels::serial. Rows are indexed by sorted-front position; a cell
// that cannot hold k points is set to kInfeasible.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>

#include "pfdisp/front.hpp"
#include "pfdisp/ties.hpp"

namespace pfdisp {

inline constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

struct ExecPolicy {
  int threads = 1;  // 0 = all available cores
};

/// Maps 0 (or negative) to the number of available hardware threads.
int resolve_threads(int requested);

/// Number of OpenMP threads the runtime will actually hand out.
int available_threads();

struct CrossingMax {
  std::size_t index = 0;
  double value = kInfeasible;
};

/// max over j in [lo, hi] of min(rising(j), falling(j)), where rising is
/// nondecreasing and falling is nonincreasing in j. The maximum sits at the
/// first j with rising(j) >= falling(j) or just before it, so a dichotomic
/// search for that crossing is enough: O(log(hi - lo + 1)) evaluations.
/// On a tie between the two straddling candidates the smaller index wins.
template <class Rising, class Falling>
CrossingMax max_min_crossing(std::size_t lo, std::size_t hi, Rising&& rising,
                             Falling&& falling) {
  std::size_t first = lo;
  std::size_t last = hi + 1;  // search [first, last) for the first crossing
  while (first < last) {
    const std::size_t mid = first + (last - first) / 2;
    if (rising(mid) >= falling(mid)) {
      last = mid;
    } else {
      first = mid + 1;
    }
  }
  CrossingMax best;
  if (first > lo) {
    const std::size_t j = first - 1;
    best = {j, std::min(rising(j), falling(j))};
  }
  if (first <= hi) {
    const double v = std::min(rising(first), falling(first));
    if (v > best.value) best = {first, v};
  }
  return best;
}

/// Entries in one triangular (a < b) layer over n points.
constexpr std::size_t triangle_size(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Column-major triangular offset: all a < b for a fixed b are contiguous.
constexpr std::size_t triangle_index(std::size_t a, std::size_t b) noexcept {
  return b * (b - 1) / 2 + a;
}

namespace kernels {

/// Max-Min cell: max over j in [k-2, i-1] of min(prev[j], d(j,i)), by
/// dichotomic search. Requires k >= 3 and i >= k-1.
double maxmin_cell(std::span<const double> prev, std::size_t i, std::size_t k,
                   const Distance& d);

/// Same value by plain enumeration of j.
double maxmin_cell_naive(std::span<const double> prev, std::size_t i, std::size_t k,
                         const Distance& d);

/// Max-Sum-Neighbor cell: max over j in [k-2, i-1] of prev[j] + d(j,i).
/// Ties go to the smallest j; argmax optionally written to *arg.
double msn_cell(std::span<const double> prev, std::size_t i, std::size_t k, const Distance& d,
                std::size_t* arg = nullptr);

/// MSN cell restricted to predecessors with d(j,i) >= floor.
double msn_cell_gapped(std::span<const double> prev, std::size_t i, std::size_t k,
                       const Distance& d, double floor, std::size_t* arg = nullptr);

// Row kernels. `out` has the same length as `prev`, except for msm_layer
// where both are triangular layers of triangle_size(n).
void maxmin_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                  const Distance& d, const ExecPolicy& exec);
void msn_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, const ExecPolicy& exec);
void msn_gapped_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                      const Distance& d, double floor, const ExecPolicy& exec);
/// Max-Sum-Min: out(b,c) = max over a < b of prev(a,b) + min(d(a,b), d(b,c)).
void msm_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, const ExecPolicy& exec);

namespace serial {

void maxmin_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                  const Distance& d);
void msn_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d);
void msn_gapped_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                      const Distance& d, double floor);
void msm_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d);

}  // namespace serial

namespace parallel {

void maxmin_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                  const Distance& d, int threads);
void msn_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, int threads);
void msn_gapped_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                      const Distance& d, double floor, int threads);
void msm_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, int threads);

}  // namespace parallel

}  // namespace kernels
}  // namespace pfdisp
