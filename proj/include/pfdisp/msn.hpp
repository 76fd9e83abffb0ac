#pragma once

// Exact Max-Sum-Neighbor p-dispersion: maximize the summed distance between
// consecutive selected points. O(pn^2) time, O(pn) space with backtracking,
// O(n) space for the value alone.
//
// C(2, i) = d(0, i); C(k, i) = max over j in [k-2, i-1] of C(k-1, j) + d(j, i);
// OPT = max over j of C(p-1, j) + d(j, n-1). Every optimum contains both
// extremes, so the first and last points are fixed.

#include <cstddef>
#include <vector>

#include "pfdisp/dp_common.hpp"
#include "pfdisp/front.hpp"
#include "pfdisp/oracle.hpp"

namespace pfdisp::msn {

/// Rows k = 2 .. p-1, stored row-major by k.
class MsnTable {
 public:
  MsnTable(std::size_t n, std::size_t p);

  std::size_t n() const noexcept { return n_; }
  std::size_t p() const noexcept { return p_; }
  std::span<double> row(std::size_t k) noexcept { return {cells_.data() + (k - 2) * n_, n_}; }
  std::span<const double> row(std::size_t k) const noexcept {
    return {cells_.data() + (k - 2) * n_, n_};
  }
  std::size_t cell_count() const noexcept { return cells_.size(); }

 private:
  std::size_t n_;
  std::size_t p_;
  std::vector<double> cells_;
};

/// Full table for p >= 3 (rows 2 .. p-1).
MsnTable build_table(const SortedFront& front, std::size_t p, const DispersionParams& params,
                     const ExecPolicy& exec = {});

Selection solve(const SortedFront& front, std::size_t p, const DispersionParams& params,
                const SolveOptions& options = {});

/// Optimum with two live rows and no backtracking.
double solve_value_only(const SortedFront& front, std::size_t p, const DispersionParams& params,
                        const SolveOptions& options = {});

}  // namespace pfdisp::msn
