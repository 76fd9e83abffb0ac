#pragma once

// Empirical scaling measurements for the DP solvers.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pfdisp/dp_common.hpp"
#include "pfdisp/instances.hpp"
#include "pfdisp/oracle.hpp"

namespace pfdisp::scaling {

struct SizeSample {
  std::size_t n = 0;
  double median_ms = 0.0;
  std::vector<double> runs_ms;
  std::size_t peak_cells = 0;
  double peak_bytes = 0.0;
  double cost = 0.0;
};

struct Report {
  Variant variant = Variant::MaxMin;
  std::size_t p = 0;
  io::ShapeKind shape = io::ShapeKind::Staircase;
  int threads = 1;
  std::vector<SizeSample> samples;
  double slope = 0.0;  // least-squares slope of log(time) against log(n)
};

struct Config {
  Variant variant = Variant::MaxMin;  // MaxMin, MaxSumNeighbor or MaxSumMin
  std::vector<std::size_t> sizes;
  std::size_t p = 10;
  io::ShapeKind shape = io::ShapeKind::Staircase;
  std::size_t repeats = 3;
  std::uint64_t seed = 1;
  ExecPolicy exec;
};

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

double median(std::vector<double> v);

/// Times the DP solver (with backtracking) on generated fronts. Only the
/// solve call is timed.
Report run(const Config& config);

std::string to_table(const Report& report);
std::string to_json(const Report& report);

}  // namespace pfdisp::scaling
