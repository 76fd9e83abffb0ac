#pragma once

#include <algorithm>
#include <cmath>

namespace pfdisp {

/// Relative tolerance used to decide that two objective values tie.
inline constexpr double kTieRelTol = 1e-12;

/// a beats b by more than the tie tolerance.
inline bool strictly_better(double a, double b) noexcept {
  const double scale = std::max(std::abs(a), std::abs(b));
  return a > b + kTieRelTol * scale;
}

/// Lowest value still considered tied with `best`.
inline double tie_floor(double best) noexcept { return best - kTieRelTol * std::abs(best); }

}  // namespace pfdisp
