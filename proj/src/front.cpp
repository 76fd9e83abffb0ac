#include "pfdisp/front.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pfdisp {

namespace {

void require_finite(std::span<const Point2> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw NonFiniteError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
}

std::vector<std::size_t> lexicographic_order(std::span<const Point2> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].x != points[b].x) return points[a].x < points[b].x;
    return points[a].y < points[b].y;
  });
  return order;
}

std::string describe(const ValidationReport& report) {
  std::ostringstream os;
  os << "invalid Pareto front: " << report.violations.size() << " violation(s)";
  if (!report.violations.empty()) {
    const auto& v = report.violations.front();
    os << ", first: points " << v.first << " and " << v.second << " ("
       << to_string(v.reason) << ")";
  }
  return os.str();
}

}  // namespace

DispersionParams::DispersionParams(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be finite and > 0");
  }
}

std::string to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::Duplicate:
      return "duplicate";
    case ViolationReason::Dominates:
      return "dominates";
    case ViolationReason::TieOnAxis:
      return "tie-on-axis";
  }
  return "unknown";
}

ValidationError::ValidationError(ValidationReport report)
    : Error(describe(report)), report_(std::move(report)) {}

ValidationReport validate(std::span<const Point2> points) {
  require_finite(points);
  ValidationReport report;
  const auto order = lexicographic_order(points);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Point2& pa = points[order[k - 1]];
    const Point2& pb = points[order[k]];
    // Reported in input order.
    const std::size_t a = std::min(order[k - 1], order[k]);
    const std::size_t b = std::max(order[k - 1], order[k]);
    // pa.x <= pb.x, and pa.y < pb.y when x ties.
    if (pa == pb) {
      report.violations.push_back({a, b, ViolationReason::Duplicate});
    } else if (pa.x == pb.x || pa.y == pb.y) {
      report.violations.push_back({a, b, ViolationReason::TieOnAxis});
    } else if (pa.y < pb.y) {
      report.violations.push_back({a, b, ViolationReason::Dominates});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

SortedFront sort_front(std::span<const Point2> points) {
  if (points.empty()) throw EmptyFrontError("front is empty");
  auto report = validate(points);
  if (!report.ok) throw ValidationError(std::move(report));

  auto order = lexicographic_order(points);
  std::vector<Point2> sorted;
  sorted.reserve(order.size());
  for (auto idx : order) sorted.push_back(points[idx]);
  return SortedFront(std::move(sorted), std::move(order));
}

SortedFront filter_dominated(std::span<const Point2> points) {
  if (points.empty()) throw EmptyFrontError("front is empty");
  require_finite(points);

  const auto order = lexicographic_order(points);
  std::vector<Point2> kept;
  std::vector<std::size_t> kept_order;
  for (auto idx : order) {
    // Survivors so far have strictly smaller x or equal x with smaller y, so
    // the candidate is non-dominated iff it strictly improves on the last y.
    if (kept.empty() || points[idx].y < kept.back().y) {
      kept.push_back(points[idx]);
      kept_order.push_back(idx);
    }
  }
  if (kept.empty()) throw EmptyFrontError("no non-dominated point remains");
  return SortedFront(std::move(kept), std::move(kept_order));
}

std::pair<std::size_t, std::size_t> extreme_points(std::span<const Point2> points) {
  if (points.empty()) throw EmptyFrontError("front is empty");
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x < points[lo].x) lo = i;
    if (points[i].x > points[hi].x) hi = i;
  }
  return {lo, hi};
}

Distance::Distance(const SortedFront& front, const DispersionParams& params) noexcept
    : pts_(front.points()), half_alpha_(0.5 * params.alpha()) {
  if (params.alpha() == 1.0) {
    kind_ = Kind::Euclid;
  } else if (params.alpha() == 2.0) {
    kind_ = Kind::Squared;
  } else {
    kind_ = Kind::Power;
  }
}

double dist(const SortedFront& front, std::size_t i, std::size_t j,
            const DispersionParams& params) {
  if (i >= front.size() || j >= front.size()) {
    throw std::out_of_range("dist: index out of range");
  }
  return Distance(front, params)(i, j);
}

}  // namespace pfdisp
