#include "pfdisp/msn.hpp"

#include <algorithm>

namespace pfdisp::msn {

namespace {

std::size_t best_middle(const Distance& d) {
  const std::size_t last = d.size() - 1;
  double best = kInfeasible;
  for (std::size_t m = 1; m < last; ++m) best = std::max(best, d(0, m) + d(m, last));
  const double tie = tie_floor(best);
  for (std::size_t m = 1; m < last; ++m)
    if (d(0, m) + d(m, last) >= tie) return m;
  return 1;
}

void fill_initial(std::span<double> row, const Distance& d) {
  row[0] = kInfeasible;
  for (std::size_t i = 1; i < row.size(); ++i) row[i] = d(0, i);
}

// max over j in [p-2, n-2] of row[j] + d(j, n-1).
double close_value(std::span<const double> row, std::size_t p, const Distance& d) {
  const std::size_t last = row.size() - 1;
  double best = kInfeasible;
  for (std::size_t j = p - 2; j < last; ++j) best = std::max(best, row[j] + d(j, last));
  return best;
}

Selection make_selection(const SortedFront& front, std::size_t p, std::vector<std::size_t> idx,
                         const DispersionParams& params) {
  Selection s;
  s.variant = Variant::MaxSumNeighbor;
  s.p = p;
  s.indices = std::move(idx);
  s.cost = dispersion_cost(front, s.indices, Variant::MaxSumNeighbor, params);
  s.method = Method::DP;
  return s;
}

}  // namespace

MsnTable::MsnTable(std::size_t n, std::size_t p)
    : n_(n), p_(p), cells_(p > 2 ? (p - 2) * n : 0, kInfeasible) {}

MsnTable build_table(const SortedFront& front, std::size_t p, const DispersionParams& params,
                     const ExecPolicy& exec) {
  detail::require_p(front.size(), p);
  const Distance d(front, params);
  MsnTable table(front.size(), p);
  if (p < 3) return table;
  fill_initial(table.row(2), d);
  for (std::size_t k = 3; k < p; ++k) kernels::msn_layer(table.row(k - 1), table.row(k), k, d, exec);
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
  if (p == 3 && options.fast_paths) return make_selection(front, p, {0, best_middle(d), last}, params);

  MsnTable table(n, p);
  meter.acquire(table.cell_count());
  fill_initial(table.row(2), d);
  for (std::size_t k = 3; k < p; ++k) {
    kernels::msn_layer(table.row(k - 1), table.row(k), k, d, options.exec);
    meter.layer();
  }

  const auto top = table.row(p - 1);
  const double opt = close_value(top, p, d);
  std::size_t j = p - 2;
  for (const double tie = tie_floor(opt); top[j] + d(j, last) < tie; ++j) {
  }

  std::vector<std::size_t> idx{last, j};
  for (std::size_t k = p - 1, i = j; k >= 3; --k) {
    std::size_t arg = k - 2;
    kernels::msn_cell(table.row(k - 1), i, k, d, &arg);
    idx.push_back(arg);
    i = arg;
  }
  idx.push_back(0);
  std::reverse(idx.begin(), idx.end());
  return make_selection(front, p, std::move(idx), params);
}

double solve_value_only(const SortedFront& front, std::size_t p, const DispersionParams& params,
                        const SolveOptions& options) {
  detail::require_p(front.size(), p);
  const std::size_t n = front.size();
  const Distance d(front, params);
  detail::CellMeter meter(options.stats);

  if (options.fast_paths) {
    if (p == 2) return d(0, n - 1);
    if (p == 3) {
      const std::size_t m = best_middle(d);
      return d(0, m) + d(m, n - 1);
    }
  }
  if (p == 2) return d(0, n - 1);

  std::vector<double> prev(n);
  std::vector<double> cur(n);
  meter.acquire(2 * n);
  fill_initial(prev, d);
  for (std::size_t k = 3; k < p; ++k) {
    kernels::msn_layer(prev, cur, k, d, options.exec);
    meter.layer();
    prev.swap(cur);
  }
  return close_value(prev, p, d);
}

}  // namespace pfdisp::msn
