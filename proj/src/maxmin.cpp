#include "pfdisp/maxmin.hpp"

#include <algorithm>

namespace pfdisp::maxmin {

namespace {

// p = 3 with both extremes fixed: one scan over the middle point.
double three_point_value(const Distance& d) {
  const std::size_t last = d.size() - 1;
  double best = kInfeasible;
  for (std::size_t m = 1; m < last; ++m) best = std::max(best, std::min(d(0, m), d(m, last)));
  return best;
}

double general_value(const SortedFront& front, std::size_t p, const Distance& d,
                     const Options& options) {
  const std::size_t n = front.size();
  detail::CellMeter meter(options.stats);

  std::vector<double> prev(n);
  meter.acquire(n);
  prev[0] = kInfeasible;
  for (std::size_t i = 1; i < n; ++i) prev[i] = d(0, i);
  if (p == 2) return prev[n - 1];

  std::vector<double> cur(n);
  meter.acquire(n);
  for (std::size_t k = 3; k < p; ++k) {
    kernels::maxmin_layer(prev, cur, k, d, options.exec);
    meter.layer();
    prev.swap(cur);
  }
  // Row p is only needed at i = n-1.
  return kernels::maxmin_cell(prev, n - 1, p, d);
}

}  // namespace

DpLayer initial_layer(const SortedFront& front, const DispersionParams& params) {
  const Distance d(front, params);
  DpLayer layer{2, std::vector<double>(front.size())};
  layer.values[0] = kInfeasible;
  for (std::size_t i = 1; i < front.size(); ++i) layer.values[i] = d(0, i);
  return layer;
}

DpLayer next_layer(const DpLayer& prev, const SortedFront& front,
                   const DispersionParams& params, const ExecPolicy& exec) {
  const Distance d(front, params);
  DpLayer out{prev.k + 1, std::vector<double>(front.size())};
  kernels::maxmin_layer(prev.values, out.values, out.k, d, exec);
  return out;
}

double bellman_cell(const DpLayer& prev, std::size_t i, const SortedFront& front,
                    const DispersionParams& params) {
  const std::size_t k = prev.k + 1;
  if (i + 1 < k || i >= front.size()) return kInfeasible;
  return kernels::maxmin_cell(prev.values, i, k, Distance(front, params));
}

double optimal_value(const SortedFront& front, std::size_t p, const DispersionParams& params,
                     const Options& options) {
  detail::require_p(front.size(), p);
  const Distance d(front, params);
  if (options.fast_paths) {
    if (p == 2) return d(0, front.size() - 1);
    if (p == 3) return three_point_value(d);
  }
  return general_value(front, p, d, options);
}

Selection solve(const SortedFront& front, std::size_t p, const DispersionParams& params,
                const Options& options) {
  const double opt = optimal_value(front, p, params, options);
  Selection s;
  s.variant = Variant::MaxMin;
  s.p = p;
  s.indices = backtrack_greedy(front, p, opt, params, options.backtrack);
  s.cost = opt;
  s.method = Method::DP;
  return s;
}

std::vector<std::size_t> backtrack_greedy(const SortedFront& front, std::size_t p, double opt,
                                          const DispersionParams& params, Backtrack direction) {
  detail::require_p(front.size(), p);
  const Distance d(front, params);
  const std::size_t n = front.size();
  const std::size_t last = n - 1;
  std::vector<std::size_t> out;
  out.reserve(p);

  auto fail = [&] {
    throw InconsistentOptimum("greedy walk cannot place " + std::to_string(p) +
                              " points at spacing " + std::to_string(opt));
  };

  if (direction == Backtrack::MinIndexes) {
    std::size_t m = 0;
    out.push_back(0);
    for (std::size_t step = 1; step + 1 < p; ++step) {
      // Smallest M > m with d(m, M) >= opt; d(m, .) increases with M.
      std::size_t first = m + 1;
      std::size_t stop = last;  // interior points stay below n-1
      while (first < stop) {
        const std::size_t mid = first + (stop - first) / 2;
        if (d(m, mid) >= opt) {
          stop = mid;
        } else {
          first = mid + 1;
        }
      }
      if (first >= last || d(m, first) < opt) fail();
      m = first;
      out.push_back(m);
    }
    if (d(m, last) < opt) fail();
    out.push_back(last);
    return out;
  }

  std::size_t m = last;
  out.push_back(last);
  for (std::size_t step = 1; step + 1 < p; ++step) {
    // Largest j in [1, m) with d(j, m) >= opt; d(., m) decreases with j.
    std::size_t first = 1;
    std::size_t stop = m;
    while (first < stop) {
      const std::size_t mid = first + (stop - first) / 2;
      if (d(mid, m) >= opt) {
        first = mid + 1;
      } else {
        stop = mid;
      }
    }
    if (first <= 1) fail();
    m = first - 1;
    out.push_back(m);
  }
  if (d(0, m) < opt) fail();
  out.push_back(0);
  std::reverse(out.begin(), out.end());
  return out;
}

IndexBounds index_bounds(const SortedFront& front, std::size_t p, double opt,
                         const DispersionParams& params) {
  return {backtrack_greedy(front, p, opt, params, Backtrack::MinIndexes),
          backtrack_greedy(front, p, opt, params, Backtrack::MaxIndexes)};
}

}  // namespace pfdisp::maxmin
