#include "pfdisp/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pfdisp/maxmin.hpp"
#include "pfdisp/msm.hpp"
#include "pfdisp/msn.hpp"

namespace pfdisp::scaling {

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two paired samples");
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= double(xs.size());
  my /= double(ys.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

Report run(const Config& config) {
  if (config.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
    throw std::invalid_argument("sizes must be ascending");
  }
  Report report;
  report.variant = config.variant;
  report.p = config.p;
  report.shape = config.shape;
  report.threads = resolve_threads(config.exec.threads);

  for (auto n : config.sizes) {
    const SortedFront front = io::generate({config.shape, n, config.seed + n});
    const DispersionParams params(1.0);
    SizeSample sample;
    sample.n = n;
    for (std::size_t r = 0; r < config.repeats; ++r) {
      DpStats stats;
      const auto start = std::chrono::steady_clock::now();
      Selection s;
      switch (config.variant) {
        case Variant::MaxMin: {
          maxmin::Options o;
          o.exec = config.exec;
          o.stats = &stats;
          s = maxmin::solve(front, config.p, params, o);
          break;
        }
        case Variant::MaxSumNeighbor:
          s = msn::solve(front, config.p, params, {config.exec, true, &stats});
          break;
        case Variant::MaxSumMin:
          s = msm::solve(front, config.p, params, {config.exec, true, &stats});
          break;
        default:
          throw std::invalid_argument("no DP solver for " + to_string(config.variant));
      }
      const auto stop = std::chrono::steady_clock::now();
      sample.runs_ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      sample.peak_cells = stats.peak_cells;
      sample.cost = s.cost;
    }
    sample.median_ms = median(sample.runs_ms);
    sample.peak_bytes = double(sample.peak_cells) * sizeof(double);
    report.samples.push_back(std::move(sample));
  }

  if (report.samples.size() >= 2) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& s : report.samples) {
      xs.push_back(double(s.n));
      ys.push_back(std::max(s.median_ms, 1e-6));
    }
    report.slope = fit_loglog_slope(xs, ys);
  }
  return report;
}

std::string to_table(const Report& report) {
  std::ostringstream os;
  os << "variant " << to_string(report.variant) << ", p=" << report.p << ", shape "
     << io::to_string(report.shape) << ", threads " << report.threads << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%10s %14s %14s %14s\n", "n", "median_ms", "peak_cells",
                "peak_MiB");
  os << line;
  for (const auto& s : report.samples) {
    std::snprintf(line, sizeof line, "%10zu %14.3f %14zu %14.3f\n", s.n, s.median_ms,
                  s.peak_cells, s.peak_bytes / (1024.0 * 1024.0));
    os << line;
  }
  std::snprintf(line, sizeof line, "fitted log-log slope: %.3f\n", report.slope);
  os << line;
  return os.str();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["variant"] = to_string(report.variant);
  doc["p"] = report.p;
  doc["shape"] = io::to_string(report.shape);
  doc["threads"] = report.threads;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& s : report.samples) {
    rows.push_back({{"n", s.n},
                    {"median_ms", s.median_ms},
                    {"runs_ms", s.runs_ms},
                    {"peak_cells", s.peak_cells},
                    {"peak_bytes", s.peak_bytes}});
  }
  doc["sizes"] = std::move(rows);
  doc["slope"] = report.slope;
  return doc.dump();
}

}  // namespace pfdisp::scaling
