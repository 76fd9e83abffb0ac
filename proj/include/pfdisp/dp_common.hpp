#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "pfdisp/errors.hpp"
#include "pfdisp/kernels.hpp"

namespace pfdisp {

/// One row k of a Bellman table: values[i] is the optimal k-selection cost
/// among points [0, i], kInfeasible where fewer than k points are available.
struct DpLayer {
  std::size_t k = 0;
  std::vector<double> values;
};

/// Instrumentation filled in by the solvers when requested.
struct DpStats {
  std::size_t peak_cells = 0;  // most DP values alive at once
  std::size_t layers = 0;      // rows computed by a layer kernel
};

struct SolveOptions {
  ExecPolicy exec;
  bool fast_paths = true;  // closed-form / enumeration paths for small p
  DpStats* stats = nullptr;
};

namespace detail {

inline void require_p(std::size_t n, std::size_t p) {
  if (p < 2 || p > n) {
    throw InfeasibleSize("p=" + std::to_string(p) + " outside [2, " + std::to_string(n) + "]");
  }
}

/// Tracks live DP cells for DpStats::peak_cells.
class CellMeter {
 public:
  explicit CellMeter(DpStats* stats) : stats_(stats) {
    if (stats_) *stats_ = {};
  }
  void acquire(std::size_t cells) {
    live_ += cells;
    if (stats_) stats_->peak_cells = std::max(stats_->peak_cells, live_);
  }
  void release(std::size_t cells) { live_ -= std::min(live_, cells); }
  void layer() {
    if (stats_) ++stats_->layers;
  }

 private:
  DpStats* stats_;
  std::size_t live_ = 0;
};

}  // namespace detail
}  // namespace pfdisp
