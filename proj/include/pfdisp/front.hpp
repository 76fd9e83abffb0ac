#pragma once

// Point/front data model for 2d Pareto fronts with both objectives minimized.
//
// A SortedFront is indexed so that x is strictly increasing and y strictly
// decreasing. Under that order distances are monotone: for i1 <= i2 < i3,
// d(i1,i2) < d(i1,i3), and for i1 < i2 <= i3, d(i2,i3) < d(i1,i3). All DP
// solvers rely on this.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pfdisp/errors.hpp"

namespace pfdisp {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Exponent applied to the Euclidean distance, d_ij = |x_i - x_j|^alpha.
class DispersionParams {
 public:
  DispersionParams() = default;
  explicit DispersionParams(double alpha);

  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_ = 1.0;
};

enum class ViolationReason { Duplicate, Dominates, TieOnAxis };

std::string to_string(ViolationReason reason);

struct Violation {
  // Positions in the caller's input sequence, first < second.
  std::size_t first = 0;
  std::size_t second = 0;
  ViolationReason reason = ViolationReason::Dominates;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Immutable front sorted by increasing x (and so decreasing y).
class SortedFront {
 public:
  std::size_t size() const noexcept { return points_.size(); }
  const Point2& operator[](std::size_t i) const noexcept { return points_[i]; }
  std::span<const Point2> points() const noexcept { return points_; }

  /// Position in the original input of the point at sorted position i.
  std::size_t original_index(std::size_t i) const noexcept { return order_[i]; }
  std::span<const std::size_t> order() const noexcept { return order_; }

 private:
  friend SortedFront sort_front(std::span<const Point2> points);
  friend SortedFront filter_dominated(std::span<const Point2> points);

  SortedFront(std::vector<Point2> points, std::vector<std::size_t> order)
      : points_(std::move(points)), order_(std::move(order)) {}

  std::vector<Point2> points_;
  std::vector<std::size_t> order_;
};

/// Checks that the points are finite and pairwise incomparable. Only pairs
/// adjacent in x-order are reported; that is enough to locate every defect
/// class, and a clean adjacent scan implies the whole set is a valid front.
ValidationReport validate(std::span<const Point2> points);

/// Sorts a valid front. Throws ValidationError on comparable, duplicated or
/// axis-tied pairs and NonFiniteError / EmptyFrontError on bad input.
SortedFront sort_front(std::span<const Point2> points);

/// Keeps the non-dominated subset. Among duplicates and weakly dominated
/// points the lexicographically smallest (x, then y) survives.
SortedFront filter_dominated(std::span<const Point2> points);

/// Positions of the min-x and max-x points, one pass, no sorting.
std::pair<std::size_t, std::size_t> extreme_points(std::span<const Point2> points);

/// Distance kernel used by every solver. Evaluated on demand, no matrix.
class Distance {
 public:
  Distance(const SortedFront& front, const DispersionParams& params) noexcept;

  enum class Kind { Euclid, Squared, Power };

  std::size_t size() const noexcept { return pts_.size(); }
  Kind kind() const noexcept { return kind_; }
  double half_alpha() const noexcept { return half_alpha_; }
  std::span<const Point2> points() const noexcept { return pts_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    const double dx = pts_[i].x - pts_[j].x;
    const double dy = pts_[i].y - pts_[j].y;
    const double sq = dx * dx + dy * dy;
    switch (kind_) {
      case Kind::Euclid:
        return std::sqrt(sq);
      case Kind::Squared:
        return sq;
      case Kind::Power:
        break;
    }
    return std::pow(sq, half_alpha_);
  }

 private:
  std::span<const Point2> pts_;
  Kind kind_;
  double half_alpha_;
};

/// Bounds-checked d_ij. Throws std::out_of_range.
double dist(const SortedFront& front, std::size_t i, std::size_t j,
            const DispersionParams& params);

}  // namespace pfdisp
