#include "pfdisp/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace pfdisp {

namespace {

void check_selection(const SortedFront& front, std::span<const std::size_t> indices) {
  if (indices.size() < 2) throw std::invalid_argument("selection needs at least 2 indices");
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] >= front.size()) throw std::out_of_range("selection index out of range");
    if (t > 0 && indices[t] <= indices[t - 1]) {
      throw std::invalid_argument("selection indices must be strictly increasing");
    }
  }
}

void check_p(const SortedFront& front, std::size_t p) {
  if (p < 2 || p > front.size()) {
    throw InfeasibleSize("p=" + std::to_string(p) + " outside [2, " +
                         std::to_string(front.size()) + "]");
  }
}

void check_budget(std::size_t n, std::size_t p, bool fix_extremes) {
  const double count = fix_extremes ? binomial(n - 2, p - 2) : binomial(n, p);
  if (count > kEnumerationBudget) {
    throw BudgetExceeded("enumeration of " + std::to_string(count) +
                         " selections exceeds the budget");
  }
}

double cost_unchecked(const Distance& d, std::span<const std::size_t> s, Variant variant) {
  const std::size_t m = s.size();
  switch (variant) {
    case Variant::MaxMin: {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t t = 0; t + 1 < m; ++t) best = std::min(best, d(s[t], s[t + 1]));
      return best;
    }
    case Variant::MaxSumNeighbor: {
      double sum = 0.0;
      for (std::size_t t = 0; t + 1 < m; ++t) sum += d(s[t], s[t + 1]);
      return sum;
    }
    case Variant::MaxSumMin: {
      double sum = 0.0;
      for (std::size_t t = 0; t < m; ++t) {
        double nearest = std::numeric_limits<double>::infinity();
        if (t > 0) nearest = std::min(nearest, d(s[t - 1], s[t]));
        if (t + 1 < m) nearest = std::min(nearest, d(s[t], s[t + 1]));
        sum += nearest;
      }
      return sum;
    }
    case Variant::MaxSum: {
      double sum = 0.0;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) sum += d(s[a], s[b]);
      return sum;
    }
    case Variant::MaxMinSum: {
      double worst = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < m; ++a) {
        double sum = 0.0;
        for (std::size_t b = 0; b < m; ++b)
          if (b != a) sum += d(s[a], s[b]);
        worst = std::min(worst, sum);
      }
      return worst;
    }
  }
  return 0.0;
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::MaxMin:
      return "max-min";
    case Variant::MaxSum:
      return "max-sum";
    case Variant::MaxSumMin:
      return "max-sum-min";
    case Variant::MaxMinSum:
      return "max-min-sum";
    case Variant::MaxSumNeighbor:
      return "max-sum-neighbor";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (auto v : kAllVariants)
    if (to_string(v) == name) return v;
  return std::nullopt;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::BruteForce:
      return "brute-force";
    case Method::DP:
      return "dp";
    case Method::Greedy:
      return "greedy";
    case Method::Hierarchic:
      return "hierarchic";
    case Method::Polished:
      return "polished";
  }
  return "unknown";
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double dispersion_cost(const SortedFront& front, std::span<const std::size_t> indices,
                       Variant variant, const DispersionParams& params) {
  check_selection(front, indices);
  return cost_unchecked(Distance(front, params), indices, variant);
}

double max_min_all_pairs(const SortedFront& front, std::span<const std::size_t> indices,
                         const DispersionParams& params) {
  check_selection(front, indices);
  const Distance d(front, params);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      best = std::min(best, d(indices[a], indices[b]));
  return best;
}

double max_sum_min_all_pairs(const SortedFront& front, std::span<const std::size_t> indices,
                             const DispersionParams& params) {
  check_selection(front, indices);
  const Distance d(front, params);
  double sum = 0.0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < indices.size(); ++b)
      if (b != a) nearest = std::min(nearest, d(indices[a], indices[b]));
    sum += nearest;
  }
  return sum;
}

Selection brute_force(const SortedFront& front, std::size_t p, Variant variant,
                      const DispersionParams& params, bool fix_extremes) {
  check_p(front, p);
  check_budget(front.size(), p, fix_extremes);
  const Distance d(front, params);

  Selection best{variant, p, {}, -std::numeric_limits<double>::infinity(), Method::BruteForce, {}};
  for_each_subset(front.size(), p, fix_extremes, [&](std::span<const std::size_t> s) {
    const double c = cost_unchecked(d, s, variant);
    if (best.indices.empty() || strictly_better(c, best.cost)) {
      best.cost = c;
      best.indices.assign(s.begin(), s.end());
    }
    return true;
  });
  return best;
}

std::vector<std::vector<std::size_t>> all_optima(const SortedFront& front, std::size_t p,
                                                 Variant variant, const DispersionParams& params,
                                                 bool fix_extremes) {
  check_p(front, p);
  check_budget(front.size(), p, fix_extremes);
  const Distance d(front, params);

  double best = -std::numeric_limits<double>::infinity();
  for_each_subset(front.size(), p, fix_extremes, [&](std::span<const std::size_t> s) {
    best = std::max(best, cost_unchecked(d, s, variant));
    return true;
  });
  const double floor = tie_floor(best);
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(front.size(), p, fix_extremes, [&](std::span<const std::size_t> s) {
    if (cost_unchecked(d, s, variant) >= floor) out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

Selection lex_brute_force(const SortedFront& front, std::size_t p,
                          const DispersionParams& params, bool anchored) {
  check_p(front, p);
  check_budget(front.size(), p, anchored);
  const Distance d(front, params);

  double best_mm = -std::numeric_limits<double>::infinity();
  for_each_subset(front.size(), p, anchored, [&](std::span<const std::size_t> s) {
    best_mm = std::max(best_mm, cost_unchecked(d, s, Variant::MaxMin));
    return true;
  });
  const double floor = tie_floor(best_mm);

  Selection best{Variant::MaxMin, p, {}, 0.0, Method::BruteForce, {}};
  double best_msn = -std::numeric_limits<double>::infinity();
  for_each_subset(front.size(), p, anchored, [&](std::span<const std::size_t> s) {
    const double mm = cost_unchecked(d, s, Variant::MaxMin);
    if (mm < floor) return true;
    const double msn = cost_unchecked(d, s, Variant::MaxSumNeighbor);
    if (best.indices.empty() || strictly_better(msn, best_msn)) {
      best_msn = msn;
      best.cost = mm;
      best.indices.assign(s.begin(), s.end());
    }
    return true;
  });
  best.secondary_cost = best_msn;
  return best;
}

}  // namespace pfdisp
