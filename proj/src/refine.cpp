#include "pfdisp/refine.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfdisp/maxmin.hpp"
#include "pfdisp/msn.hpp"

namespace pfdisp::refine {

namespace {

LexCost lex_cost(const SortedFront& front, std::span<const std::size_t> idx,
                 const DispersionParams& params) {
  return {dispersion_cost(front, idx, Variant::MaxMin, params),
          dispersion_cost(front, idx, Variant::MaxSumNeighbor, params)};
}

}  // namespace

Selection solve_hierarchic(const SortedFront& front, std::size_t p,
                           const DispersionParams& params, const SolveOptions& options) {
  detail::require_p(front.size(), p);
  const std::size_t n = front.size();
  const std::size_t last = n - 1;
  const Distance d(front, params);

  maxmin::Options mm_options;
  mm_options.exec = options.exec;
  mm_options.fast_paths = options.fast_paths;
  const double gap = tie_floor(maxmin::optimal_value(front, p, params, mm_options));

  detail::CellMeter meter(options.stats);
  std::vector<std::size_t> idx;
  if (p == 2) {
    idx = {0, last};
  } else {
    msn::MsnTable table(n, p);
    meter.acquire(table.cell_count());
    auto row2 = table.row(2);
    row2[0] = kInfeasible;
    for (std::size_t i = 1; i < n; ++i) row2[i] = d(0, i) >= gap ? d(0, i) : kInfeasible;
    for (std::size_t k = 3; k < p; ++k) {
      kernels::msn_gapped_layer(table.row(k - 1), table.row(k), k, d, gap, options.exec);
      meter.layer();
    }

    const auto top = table.row(p - 1);
    double best = kInfeasible;
    for (std::size_t j = p - 2; j < last; ++j)
      if (d(j, last) >= gap) best = std::max(best, top[j] + d(j, last));
    std::size_t j = p - 2;
    for (const double tie = tie_floor(best); d(j, last) < gap || top[j] + d(j, last) < tie;) ++j;

    idx = {last, j};
    for (std::size_t k = p - 1, i = j; k >= 3; --k) {
      std::size_t arg = k - 2;
      kernels::msn_cell_gapped(table.row(k - 1), i, k, d, gap, &arg);
      idx.push_back(arg);
      i = arg;
    }
    idx.push_back(0);
    std::reverse(idx.begin(), idx.end());
  }

  Selection s;
  s.variant = Variant::MaxMin;
  s.p = p;
  s.indices = std::move(idx);
  const LexCost c = lex_cost(front, s.indices, params);
  s.cost = c.primary;
  s.secondary_cost = c.secondary;
  s.method = Method::Hierarchic;
  return s;
}

PolishResult polish(const SortedFront& front, std::span<const std::size_t> indices,
                    const DispersionParams& params) {
  const std::size_t n = front.size();
  if (indices.size() < 2 || indices.front() != 0 || indices.back() != n - 1) {
    throw std::invalid_argument("polish: selection must be anchored at 0 and n-1");
  }
  for (std::size_t t = 1; t < indices.size(); ++t) {
    if (indices[t] <= indices[t - 1]) {
      throw std::invalid_argument("polish: indices must be strictly increasing");
    }
  }
  const Distance d(front, params);

  PolishResult r;
  r.indices.assign(indices.begin(), indices.end());
  r.before = lex_cost(front, r.indices, params);
  auto& s = r.indices;
  bool moved = true;
  while (moved) {
    moved = false;
    ++r.sweeps;
    for (std::size_t t = 1; t + 1 < s.size(); ++t) {
      const std::size_t a = s[t - 1];
      const std::size_t c = s[t + 1];
      const double current = std::min(d(a, s[t]), d(s[t], c));
      // d(a, .) rises and d(., c) falls over (a, c).
      const CrossingMax best = max_min_crossing(
          a + 1, c - 1, [&](std::size_t m) { return d(a, m); },
          [&](std::size_t m) { return d(m, c); });
      if (best.value > current) {
        s[t] = best.index;
        moved = true;
        ++r.moves;
      }
    }
  }
  r.after = lex_cost(front, r.indices, params);
  return r;
}

std::vector<std::size_t> seed_centroids(const SortedFront& front, std::size_t k,
                                        SeedStrategy strategy, const DispersionParams& params,
                                        const SolveOptions& options) {
  maxmin::Options mm_options;
  mm_options.exec = options.exec;
  mm_options.fast_paths = options.fast_paths;
  if (strategy == SeedStrategy::Direct) {
    if (k < 2 || k > front.size()) {
      throw InfeasibleSize("direct seeding needs 2 <= k <= n");
    }
    return maxmin::solve(front, k, params, mm_options).indices;
  }
  if (k < 1 || 2 * k + 1 > front.size()) {
    throw InfeasibleSize("intermediate seeding needs 1 <= k and 2k+1 <= n");
  }
  const auto full = maxmin::solve(front, 2 * k + 1, params, mm_options).indices;
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t t = 1; t < full.size(); t += 2) out.push_back(full[t]);
  return out;
}

}  // namespace pfdisp::refine
