#include "pfdisp/msm.hpp"

#include <algorithm>

namespace pfdisp::msm {

namespace {

// Nearest-neighbour sum of a small selection, left to right.
double selection_cost(const Distance& d, std::span<const std::size_t> s) {
  double sum = 0.0;
  for (std::size_t t = 0; t < s.size(); ++t) {
    double nearest = t > 0 ? d(s[t - 1], s[t]) : d(s[t], s[t + 1]);
    if (t > 0 && t + 1 < s.size()) nearest = std::min(nearest, d(s[t], s[t + 1]));
    sum += nearest;
  }
  return sum;
}

// p in {3, 4, 5}: enumerate the free middle points with the extremes fixed.
std::vector<std::size_t> enumerate_anchored(const Distance& d, std::size_t p) {
  std::vector<std::size_t> best;
  double best_cost = kInfeasible;
  for_each_subset(d.size(), p, true, [&](std::span<const std::size_t> s) {
    const double c = selection_cost(d, s);
    if (best.empty() || strictly_better(c, best_cost)) {
      best_cost = c;
      best.assign(s.begin(), s.end());
    }
    return true;
  });
  return best;
}

void fill_initial(std::span<double> layer, const Distance& d) {
  std::fill(layer.begin(), layer.end(), kInfeasible);
  for (std::size_t b = 1; b < d.size(); ++b) layer[triangle_index(0, b)] = d(0, b);
}

double close_term(double v, const Distance& d, std::size_t a, std::size_t b, std::size_t last) {
  const double dbl = d(b, last);
  return v + std::min(d(a, b), dbl) + dbl;
}

double close_value(std::span<const double> layer, std::size_t p, const Distance& d) {
  const std::size_t last = d.size() - 1;
  double best = kInfeasible;
  for (std::size_t b = p - 2; b < last; ++b)
    for (std::size_t a = p - 3; a < b; ++a)
      best = std::max(best, close_term(layer[triangle_index(a, b)], d, a, b, last));
  return best;
}

Selection make_selection(const SortedFront& front, std::size_t p, std::vector<std::size_t> idx,
                         const DispersionParams& params) {
  Selection s;
  s.variant = Variant::MaxSumMin;
  s.p = p;
  s.indices = std::move(idx);
  s.cost = dispersion_cost(front, s.indices, Variant::MaxSumMin, params);
  s.method = Method::DP;
  return s;
}

}  // namespace

MsmTable::MsmTable(std::size_t n, std::size_t p)
    : n_(n), stride_(triangle_size(n)), cells_(p > 2 ? (p - 2) * stride_ : 0, kInfeasible) {}

MsmTable build_table(const SortedFront& front, std::size_t p, const DispersionParams& params,
                     const ExecPolicy& exec) {
  detail::require_p(front.size(), p);
  const Distance d(front, params);
  MsmTable table(front.size(), p);
  if (p < 3) return table;
  fill_initial(table.layer(2), d);
  for (std::size_t k = 3; k < p; ++k)
    kernels::msm_layer(table.layer(k - 1), table.layer(k), k, d, exec);
  return table;
}

Selection solve(const SortedFront& front, std::size_t p, const DispersionParams& params,
                const SolveOptions& options) {
  detail::require_p(front.size(), p);
  const std::size_t n = front.size();
  const std::size_t last = n - 1;
  const Distance d(front, params);
  detail::CellMeter meter(options.stats);

  if (p == 2) return make_selection(front, p, {0, last}, params);
  if (p <= 5 && options.fast_paths) return make_selection(front, p, enumerate_anchored(d, p), params);

  MsmTable table(n, p);
  meter.acquire(table.cell_count());
  fill_initial(table.layer(2), d);
  for (std::size_t k = 3; k < p; ++k) {
    kernels::msm_layer(table.layer(k - 1), table.layer(k), k, d, options.exec);
    meter.layer();
  }

  const auto top = table.layer(p - 1);
  const double tie = tie_floor(close_value(top, p, d));
  std::size_t a = 0;
  std::size_t b = 0;
  for (std::size_t bb = p - 2; bb < last && b == 0; ++bb) {
    for (std::size_t aa = p - 3; aa < bb; ++aa) {
      if (close_term(top[triangle_index(aa, bb)], d, aa, bb, last) >= tie) {
        a = aa;
        b = bb;
        break;
      }
    }
  }

  std::vector<std::size_t> idx{last, b, a};
  for (std::size_t k = p - 1; k >= 3; --k) {
    // Predecessor of the pair (a, b) in layer k-1; smallest within ties.
    const auto prev = table.layer(k - 1);
    const double target = tie_floor(table.at(k, a, b));
    std::size_t pred = k - 3;
    while (prev[triangle_index(pred, a)] + std::min(d(pred, a), d(a, b)) < target) ++pred;
    idx.push_back(pred);
    b = a;
    a = pred;
  }
  std::reverse(idx.begin(), idx.end());
  return make_selection(front, p, std::move(idx), params);
}

double solve_value_only(const SortedFront& front, std::size_t p, const DispersionParams& params,
                        const SolveOptions& options) {
  detail::require_p(front.size(), p);
  const std::size_t n = front.size();
  const Distance d(front, params);
  detail::CellMeter meter(options.stats);

  if (p == 2) return 2.0 * d(0, n - 1);
  if (p <= 5 && options.fast_paths) return selection_cost(d, enumerate_anchored(d, p));

  std::vector<double> prev(triangle_size(n));
  std::vector<double> cur(triangle_size(n));
  meter.acquire(2 * triangle_size(n));
  fill_initial(prev, d);
  for (std::size_t k = 3; k < p; ++k) {
    kernels::msm_layer(prev, cur, k, d, options.exec);
    meter.layer();
    prev.swap(cur);
  }
  return close_value(prev, p, d);
}

}  // namespace pfdisp::msm
