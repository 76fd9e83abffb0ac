#pragma once

// Random instances for the property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pfdisp/front.hpp"
#include "pfdisp/instances.hpp"

namespace pfdisp::test {

using Rng = std::mt19937_64;

inline SortedFront front_of(std::initializer_list<Point2> pts) {
  return sort_front(std::vector<Point2>(pts));
}

// Small fixtures used across the suites.
inline SortedFront front_c() { return front_of({{0, 5}, {1, 3}, {2, 2}, {5, 0}}); }
inline SortedFront front_a() { return front_of({{0, 10}, {1, 9}, {3, 7}, {5, 5}}); }

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Integer coordinates: many exactly equal distances, so ties get exercised.
inline SortedFront grid_front(Rng& rng, std::size_t n) {
  auto distinct = [&](std::size_t span) {
    std::set<int> s;
    while (s.size() < n) s.insert(int(uniform(rng, 0, span)));
    return std::vector<int>(s.begin(), s.end());
  };
  const auto xs = distinct(3 * n);
  const auto ys = distinct(3 * n);
  std::vector<Point2> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {double(xs[i]), double(ys[n - 1 - i])};
  std::shuffle(pts.begin(), pts.end(), rng);
  return sort_front(pts);
}

inline SortedFront uniform_front(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (auto& x : xs) x = u(rng);
  for (auto& y : ys) y = u(rng);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  std::vector<Point2> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {xs[i], ys[i]};
  return sort_front(pts);
}

/// Cycles through every generator shape plus integer-grid and uniform fronts.
inline SortedFront random_front(Rng& rng, std::size_t n) {
  const auto kind = uniform(rng, 0, 6);
  if (kind < 5) return io::generate({io::kAllShapes[kind], n, rng()});
  if (kind == 5) return grid_front(rng, n);
  return uniform_front(rng, n);
}

inline double pick_alpha(Rng& rng) {
  constexpr double alphas[] = {0.5, 1.0, 2.0};
  return alphas[uniform(rng, 0, 2)];
}

inline bool same_value(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace pfdisp::test
