#pragma once

// Exact Max-Sum-Min p-dispersion: maximize the sum, over selected points, of
// the distance to the nearest selected neighbour. O(pn^3) time, O(pn^2) space.
//
// State V(k, a, b): best partial cost of k points starting at 0 and ending
// with the consecutive pair a < b, where every point before b has its
// contribution settled and b's contribution is deferred until its right
// neighbour is known:
//   V(2, 0, b)   = d(0, b)
//   V(k+1, b, c) = max over a < b of V(k, a, b) + min(d(a, b), d(b, c))
//   OPT          = max over a < b of V(p-1, a, b) + min(d(a,b), d(b,n-1)) + d(b, n-1)
// Layers are triangular (a < b), column-major so a column a < b is contiguous.

#include <cstddef>
#include <span>
#include <vector>

#include "pfdisp/dp_common.hpp"
#include "pfdisp/front.hpp"
#include "pfdisp/oracle.hpp"

namespace pfdisp::msm {

/// Layers k = 2 .. p-1 of V.
class MsmTable {
 public:
  MsmTable(std::size_t n, std::size_t p);

  std::size_t n() const noexcept { return n_; }
  std::span<double> layer(std::size_t k) noexcept {
    return {cells_.data() + (k - 2) * stride_, stride_};
  }
  std::span<const double> layer(std::size_t k) const noexcept {
    return {cells_.data() + (k - 2) * stride_, stride_};
  }
  double at(std::size_t k, std::size_t a, std::size_t b) const noexcept {
    return layer(k)[triangle_index(a, b)];
  }
  std::size_t cell_count() const noexcept { return cells_.size(); }

 private:
  std::size_t n_;
  std::size_t stride_;
  std::vector<double> cells_;
};

/// Full table for p >= 3.
MsmTable build_table(const SortedFront& front, std::size_t p, const DispersionParams& params,
                     const ExecPolicy& exec = {});

Selection solve(const SortedFront& front, std::size_t p, const DispersionParams& params,
                const SolveOptions& options = {});

/// Optimum with two live layers and no backtracking.
double solve_value_only(const SortedFront& front, std::size_t p, const DispersionParams& params,
                        const SolveOptions& options = {});

}  // namespace pfdisp::msm
