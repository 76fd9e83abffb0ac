#include "pfdisp/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

namespace pfdisp {

namespace {

// Metric functors mirroring Distance::operator() exactly, without the
// per-call dispatch, so the hot loops can be specialized and vectorized.
struct EuclidMetric {
  const Point2* p;
  double operator()(std::size_t i, std::size_t j) const noexcept {
    const double dx = p[i].x - p[j].x;
    const double dy = p[i].y - p[j].y;
    return std::sqrt(dx * dx + dy * dy);
  }
};

struct SquaredMetric {
  const Point2* p;
  double operator()(std::size_t i, std::size_t j) const noexcept {
    const double dx = p[i].x - p[j].x;
    const double dy = p[i].y - p[j].y;
    return dx * dx + dy * dy;
  }
};

struct PowerMetric {
  const Point2* p;
  double half_alpha;
  double operator()(std::size_t i, std::size_t j) const noexcept {
    const double dx = p[i].x - p[j].x;
    const double dy = p[i].y - p[j].y;
    return std::pow(dx * dx + dy * dy, half_alpha);
  }
};

template <class Fn>
void with_metric(const Distance& d, Fn&& fn) {
  const Point2* p = d.points().data();
  switch (d.kind()) {
    case Distance::Kind::Euclid:
      fn(EuclidMetric{p});
      return;
    case Distance::Kind::Squared:
      fn(SquaredMetric{p});
      return;
    case Distance::Kind::Power:
      fn(PowerMetric{p, d.half_alpha()});
      return;
  }
}

template <class Metric>
double maxmin_value(const double* prev, std::size_t i, std::size_t k, const Metric& m) {
  return max_min_crossing(
             k - 2, i - 1, [&](std::size_t j) { return prev[j]; },
             [&](std::size_t j) { return m(j, i); })
      .value;
}

template <class Metric>
double msn_value(const double* prev, std::size_t i, std::size_t k, const Metric& m) {
  double best = kInfeasible;
#pragma omp simd reduction(max : best)
  for (std::size_t j = k - 2; j < i; ++j) {
    const double v = prev[j] + m(j, i);
    best = v > best ? v : best;
  }
  return best;
}

// One past the last j in [lo, i) with m(j, i) >= floor; m(., i) is
// nonincreasing so the admissible predecessors form a prefix.
template <class Metric>
std::size_t gap_end(std::size_t lo, std::size_t i, double floor, const Metric& m) {
  std::size_t first = lo;
  std::size_t last = i;
  while (first < last) {
    const std::size_t mid = first + (last - first) / 2;
    if (m(mid, i) >= floor) {
      first = mid + 1;
    } else {
      last = mid;
    }
  }
  return first;
}

template <class Metric>
double msn_gapped_value(const double* prev, std::size_t i, std::size_t k, const Metric& m,
                        double floor) {
  const std::size_t end = gap_end(k - 2, i, floor, m);
  double best = kInfeasible;
  for (std::size_t j = k - 2; j < end; ++j) {
    const double v = prev[j] + m(j, i);
    best = v > best ? v : best;
  }
  return best;
}

// Row of fixed b in a Max-Sum-Min layer: every c in (b, n) from the column
// prev(., b). dcol[a] = d(a, b) is precomputed once for the row.
template <class Metric>
void msm_row(const double* prev, double* out, std::size_t n, std::size_t k, std::size_t b,
             const Metric& m, double* dcol) {
  const std::size_t a_lo = k - 3;
  const double* column = prev + triangle_index(0, b);
  for (std::size_t a = a_lo; a < b; ++a) dcol[a] = m(a, b);
  for (std::size_t c = b + 1; c < n; ++c) {
    const double dbc = m(b, c);
    double best = kInfeasible;
#pragma omp simd reduction(max : best)
    for (std::size_t a = a_lo; a < b; ++a) {
      const double v = column[a] + std::min(dcol[a], dbc);
      best = v > best ? v : best;
    }
    out[triangle_index(b, c)] = best;
  }
}

void fill_head(std::span<double> out, std::size_t feasible_from) {
  const auto stop = std::min(feasible_from, out.size());
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(stop), kInfeasible);
}

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return available_threads();
}

int available_threads() { return std::max(1, omp_get_num_procs()); }

namespace kernels {

double maxmin_cell(std::span<const double> prev, std::size_t i, std::size_t k,
                   const Distance& d) {
  assert(k >= 3 && i >= k - 1 && i < prev.size());
  return maxmin_value(prev.data(), i, k, d);
}

double maxmin_cell_naive(std::span<const double> prev, std::size_t i, std::size_t k,
                         const Distance& d) {
  double best = kInfeasible;
  for (std::size_t j = k - 2; j < i; ++j) best = std::max(best, std::min(prev[j], d(j, i)));
  return best;
}

double msn_cell(std::span<const double> prev, std::size_t i, std::size_t k, const Distance& d,
                std::size_t* arg) {
  double best = kInfeasible;
  for (std::size_t j = k - 2; j < i; ++j) best = std::max(best, prev[j] + d(j, i));
  if (arg) {
    const double tie = tie_floor(best);
    for (std::size_t j = k - 2; j < i; ++j) {
      if (prev[j] + d(j, i) >= tie) {
        *arg = j;
        break;
      }
    }
  }
  return best;
}

double msn_cell_gapped(std::span<const double> prev, std::size_t i, std::size_t k,
                       const Distance& d, double floor, std::size_t* arg) {
  double best = kInfeasible;
  std::size_t end = k - 2;
  for (; end < i && d(end, i) >= floor; ++end) best = std::max(best, prev[end] + d(end, i));
  if (arg && best != kInfeasible) {
    const double tie = tie_floor(best);
    for (std::size_t j = k - 2; j < end; ++j) {
      if (prev[j] + d(j, i) >= tie) {
        *arg = j;
        break;
      }
    }
  }
  return best;
}

void maxmin_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                  const Distance& d, const ExecPolicy& exec) {
  parallel::maxmin_layer(prev, out, k, d, resolve_threads(exec.threads));
}

void msn_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, const ExecPolicy& exec) {
  parallel::msn_layer(prev, out, k, d, resolve_threads(exec.threads));
}

void msn_gapped_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                      const Distance& d, double floor, const ExecPolicy& exec) {
  parallel::msn_gapped_layer(prev, out, k, d, floor, resolve_threads(exec.threads));
}

void msm_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, const ExecPolicy& exec) {
  parallel::msm_layer(prev, out, k, d, resolve_threads(exec.threads));
}

namespace serial {

void maxmin_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                  const Distance& d) {
  fill_head(out, k - 1);
  with_metric(d, [&](const auto& m) {
    for (std::size_t i = k - 1; i < out.size(); ++i) out[i] = maxmin_value(prev.data(), i, k, m);
  });
}

void msn_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d) {
  fill_head(out, k - 1);
  for (std::size_t i = k - 1; i < out.size(); ++i) {
    double best = kInfeasible;
    for (std::size_t j = k - 2; j < i; ++j) best = std::max(best, prev[j] + d(j, i));
    out[i] = best;
  }
}

void msn_gapped_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                      const Distance& d, double floor) {
  fill_head(out, k - 1);
  for (std::size_t i = k - 1; i < out.size(); ++i) out[i] = msn_cell_gapped(prev, i, k, d, floor);
}

void msm_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d) {
  const std::size_t n = d.size();
  assert(k >= 3 && prev.size() == triangle_size(n) && out.size() == prev.size());
  std::fill(out.begin(), out.end(), kInfeasible);
  for (std::size_t b = k - 2; b + 1 < n; ++b) {
    for (std::size_t c = b + 1; c < n; ++c) {
      double best = kInfeasible;
      for (std::size_t a = k - 3; a < b; ++a) {
        best = std::max(best, prev[triangle_index(a, b)] + std::min(d(a, b), d(b, c)));
      }
      out[triangle_index(b, c)] = best;
    }
  }
}

}  // namespace serial

namespace parallel {

// Cells are handed out from the highest index down: cost grows with i, so
// the longest tasks start first.

void maxmin_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                  const Distance& d, int threads) {
  fill_head(out, k - 1);
  const auto count = static_cast<std::ptrdiff_t>(out.size()) - static_cast<std::ptrdiff_t>(k - 1);
  if (count <= 0) return;
  const std::size_t top = out.size() - 1;
  with_metric(d, [&](const auto& m) {
#pragma omp parallel for schedule(dynamic, 1024) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const std::size_t i = top - static_cast<std::size_t>(t);
      out[i] = maxmin_value(prev.data(), i, k, m);
    }
  });
}

void msn_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, int threads) {
  fill_head(out, k - 1);
  const auto count = static_cast<std::ptrdiff_t>(out.size()) - static_cast<std::ptrdiff_t>(k - 1);
  if (count <= 0) return;
  const std::size_t top = out.size() - 1;
  with_metric(d, [&](const auto& m) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const std::size_t i = top - static_cast<std::size_t>(t);
      out[i] = msn_value(prev.data(), i, k, m);
    }
  });
}

void msn_gapped_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
                      const Distance& d, double floor, int threads) {
  fill_head(out, k - 1);
  const auto count = static_cast<std::ptrdiff_t>(out.size()) - static_cast<std::ptrdiff_t>(k - 1);
  if (count <= 0) return;
  const std::size_t top = out.size() - 1;
  with_metric(d, [&](const auto& m) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t t = 0; t < count; ++t) {
      const std::size_t i = top - static_cast<std::size_t>(t);
      out[i] = msn_gapped_value(prev.data(), i, k, m, floor);
    }
  });
}

void msm_layer(std::span<const double> prev, std::span<double> out, std::size_t k,
               const Distance& d, int threads) {
  const std::size_t n = d.size();
  assert(k >= 3 && prev.size() == triangle_size(n) && out.size() == prev.size());
  std::fill(out.begin(), out.end(), kInfeasible);
  if (n < k) return;
  const auto rows = static_cast<std::ptrdiff_t>(n - 1) - static_cast<std::ptrdiff_t>(k - 2);
  with_metric(d, [&](const auto& m) {
#pragma omp parallel num_threads(threads)
    {
      std::vector<double> dcol(n);
#pragma omp for schedule(dynamic, 1)
      for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const std::size_t b = k - 2 + static_cast<std::size_t>(r);
        msm_row(prev.data(), out.data(), n, k, b, m, dcol.data());
      }
    }
  });
}

}  // namespace parallel

}  // namespace kernels
}  // namespace pfdisp
