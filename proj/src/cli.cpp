#include "pfdisp/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfdisp/instances.hpp"
#include "pfdisp/maxmin.hpp"
#include "pfdisp/msm.hpp"
#include "pfdisp/msn.hpp"
#include "pfdisp/oracle.hpp"
#include "pfdisp/refine.hpp"
#include "pfdisp/scaling.hpp"

namespace pfdisp::cli {

namespace {

// What `--variant` resolved to.
struct Route {
  enum Kind { Dp, Hierarchic, Brute } kind = Dp;
  Variant variant = Variant::MaxMin;
};

std::optional<Route> parse_route(const std::string& s) {
  if (s == "hierarchic") return Route{Route::Hierarchic, Variant::MaxMin};
  constexpr std::string_view brute = "brute:";
  if (s.starts_with(brute)) {
    auto v = parse_variant(std::string_view(s).substr(brute.size()));
    if (!v) return std::nullopt;
    return Route{Route::Brute, *v};
  }
  auto v = parse_variant(s);
  if (!v || *v == Variant::MaxSum || *v == Variant::MaxMinSum) return std::nullopt;
  return Route{Route::Dp, *v};
}

std::optional<io::Format> parse_format(const std::string& s) {
  if (s == "csv") return io::Format::CSV;
  if (s == "json") return io::Format::JSON;
  return std::nullopt;
}

int threads_from_env(int flag, bool flag_given) {
  if (flag_given) return flag;
  if (const char* env = std::getenv("PFD_THREADS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("PFD_THREADS", std::string("not an integer: ") + env);
    }
  }
  return 1;
}

std::vector<Point2> load_points(const std::string& path, const std::string& format) {
  std::optional<io::Format> fmt;
  if (!format.empty()) fmt = parse_format(format);
  if (path == "-") return io::read_points(std::cin, fmt.value_or(io::Format::CSV));
  return io::read_points_file(path, fmt);
}

void report_validation(const ValidationReport& report, const std::vector<Point2>& pts,
                       std::ostream& err) {
  for (const auto& v : report.violations) {
    err << "invalid front: points " << v.first << " (" << pts[v.first].x << ", "
        << pts[v.first].y << ") and " << v.second << " (" << pts[v.second].x << ", "
        << pts[v.second].y << "): " << to_string(v.reason) << "\n";
  }
}

Selection dispatch(const Route& route, const SortedFront& front, std::size_t p,
                   const DispersionParams& params, maxmin::Backtrack backtrack,
                   const ExecPolicy& exec) {
  switch (route.kind) {
    case Route::Hierarchic:
      return refine::solve_hierarchic(front, p, params, {exec});
    case Route::Brute: {
      // Unrestricted: only some variants always keep both extremes.
      return brute_force(front, p, route.variant, params, false);
    }
    case Route::Dp:
      break;
  }
  switch (route.variant) {
    case Variant::MaxMin: {
      maxmin::Options o;
      o.exec = exec;
      o.backtrack = backtrack;
      return maxmin::solve(front, p, params, o);
    }
    case Variant::MaxSumNeighbor:
      return msn::solve(front, p, params, {exec});
    case Variant::MaxSumMin:
      return msm::solve(front, p, params, {exec});
    default:
      throw std::logic_error("no DP route for " + to_string(route.variant));
  }
}

// Maps library exceptions onto exit codes; `body` does the work.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NonFiniteError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const EmptyFrontError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InfeasibleSize& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

struct SolveArgs {
  std::string input = "-";
  std::string input_format;
  std::string variant = "max-min";
  std::size_t p = 0;
  double alpha = 1.0;
  bool filter = false;
  std::string backtrack = "min";
  bool polish = false;
  int threads = 1;
  std::string output_format = "json";
};

int cmd_solve(const SolveArgs& a, bool threads_given, std::ostream& out, std::ostream& err) {
  const auto route = parse_route(a.variant);
  if (!route) {
    err << "error: unknown variant '" << a.variant << "'\n";
    return kUsage;
  }
  const auto out_format = parse_format(a.output_format);
  if (!out_format) {
    err << "error: unknown output format '" << a.output_format << "'\n";
    return kUsage;
  }
  if (a.polish && !(route->kind == Route::Dp && route->variant == Variant::MaxMin)) {
    err << "error: --polish applies to max-min results only\n";
    return kUsage;
  }
  const DispersionParams params(a.alpha);
  const ExecPolicy exec{threads_from_env(a.threads, threads_given)};
  const auto backtrack =
      a.backtrack == "max" ? maxmin::Backtrack::MaxIndexes : maxmin::Backtrack::MinIndexes;

  const auto points = load_points(a.input, a.input_format);
  std::optional<SortedFront> front;
  if (a.filter) {
    front = filter_dominated(points);
  } else {
    const auto report = validate(points);
    if (!report.ok) {
      report_validation(report, points, err);
      return kInvalidInput;
    }
    front = sort_front(points);
  }

  const auto start = std::chrono::steady_clock::now();
  Selection s = dispatch(*route, *front, a.p, params, backtrack, exec);
  if (a.polish) {
    auto r = refine::polish(*front, s.indices, params);
    s.indices = std::move(r.indices);
    s.cost = r.after.primary;
    s.secondary_cost = r.after.secondary;
    s.method = Method::Polished;
  }
  const auto stop = std::chrono::steady_clock::now();

  const double elapsed = std::chrono::duration<double, std::milli>(stop - start).count();
  io::write_selection(out, {s, *front, params, elapsed}, *out_format);
  return kOk;
}

int cmd_validate(const std::string& input, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  const auto points = load_points(input, format);
  const auto report = validate(points);
  if (!report.ok) {
    report_validation(report, points, err);
    return kInvalidInput;
  }
  out << "ok: " << points.size() << " points form a valid front\n";
  return kOk;
}

int cmd_generate(const std::string& shape, std::size_t n, std::uint64_t seed,
                 const std::string& output, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  const auto kind = io::parse_shape(shape);
  if (!kind) {
    err << "error: unknown shape '" << shape << "'\n";
    return kUsage;
  }
  auto fmt = format.empty() ? std::optional<io::Format>(io::guess_format(output))
                            : parse_format(format);
  if (!fmt) {
    err << "error: unknown format '" << format << "'\n";
    return kUsage;
  }
  const SortedFront front = io::generate({*kind, n, seed});
  if (output == "-") {
    io::write_points(out, front, *fmt);
    return kOk;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << output << " for writing\n";
    return kUsage;
  }
  io::write_points(file, front, *fmt);
  return kOk;
}

struct BenchArgs {
  std::string variant = "max-min";
  std::vector<std::size_t> sizes;
  std::size_t p = 10;
  std::string shape = "staircase";
  std::size_t repeats = 3;
  int threads = 1;
  std::uint64_t seed = 1;
  bool json = false;
};

int cmd_bench(const BenchArgs& a, bool threads_given, std::ostream& out, std::ostream& err) {
  const auto route = parse_route(a.variant);
  if (!route || route->kind != Route::Dp) {
    err << "error: bench supports max-min, max-sum-neighbor and max-sum-min\n";
    return kUsage;
  }
  const auto shape = io::parse_shape(a.shape);
  if (!shape) {
    err << "error: unknown shape '" << a.shape << "'\n";
    return kUsage;
  }
  if (a.repeats < 3) {
    err << "error: --repeats must be at least 3\n";
    return kUsage;
  }
  scaling::Config c;
  c.variant = route->variant;
  c.sizes = a.sizes;
  c.p = a.p;
  c.shape = *shape;
  c.repeats = a.repeats;
  c.seed = a.seed;
  c.exec.threads = threads_from_env(a.threads, threads_given);
  const auto report = scaling::run(c);
  out << (a.json ? scaling::to_json(report) + "\n" : scaling::to_table(report));
  return kOk;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
  return s + "}";
}

int cmd_compare(const std::string& input, const std::string& format, std::size_t p,
                double alpha, bool json, std::ostream& out, std::ostream& err) {
  const DispersionParams params(alpha);
  const auto points = load_points(input, format);
  const auto report = validate(points);
  if (!report.ok) {
    report_validation(report, points, err);
    return kInvalidInput;
  }
  const SortedFront front = sort_front(points);
  const bool cross_check = front.size() <= 14;

  auto rows = nlohmann::ordered_json::array();
  std::ostringstream table;
  table << "variant            method        cost                indices\n";
  for (Variant v : kAllVariants) {
    Selection s;
    if (v == Variant::MaxSum || v == Variant::MaxMinSum) {
      s = brute_force(front, p, v, params);
    } else {
      s = dispatch({Route::Dp, v}, front, p, params, maxmin::Backtrack::MinIndexes, {});
      if (cross_check) {
        const double ref = brute_force(front, p, v, params).cost;
        if (strictly_better(ref, s.cost) || strictly_better(s.cost, ref)) {
          err << "error: " << to_string(v) << " DP value " << io::format_real(s.cost)
              << " disagrees with enumeration " << io::format_real(ref) << "\n";
          return kUsage;
        }
      }
    }
    char line[200];
    std::snprintf(line, sizeof line, "%-18s %-13s %-19s %s\n", to_string(v).c_str(),
                  to_string(s.method).c_str(), io::format_real(s.cost).c_str(),
                  join(s.indices).c_str());
    table << line;
    rows.push_back({{"variant", to_string(v)},
                    {"method", to_string(s.method)},
                    {"cost", s.cost},
                    {"indices", s.indices},
                    {"cross_checked", cross_check && s.method == Method::DP}});
  }
  if (json) {
    out << nlohmann::ordered_json{{"p", p}, {"alpha", alpha}, {"n", front.size()}, {"rows", rows}}
               .dump()
        << "\n";
  } else {
    out << table.str();
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representative subsets of 2d Pareto fronts by p-dispersion"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* sc = app.add_subcommand("solve", "select p dispersed points");
  sc->add_option("-i,--input", solve.input, "point file, '-' for stdin")->capture_default_str();
  sc->add_option("--format", solve.input_format, "input format: csv|json (default by extension)");
  sc->add_option("-v,--variant", solve.variant,
                 "max-min | max-sum-neighbor | max-sum-min | hierarchic | brute:<variant>")
      ->capture_default_str();
  sc->add_option("-p,--p", solve.p, "number of points to select")->required();
  sc->add_option("-a,--alpha", solve.alpha, "distance exponent")->capture_default_str();
  sc->add_flag("--filter-dominated", solve.filter, "drop dominated/duplicate points first");
  sc->add_option("--backtrack", solve.backtrack, "max-min reconstruction: min|max")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  sc->add_flag("--polish", solve.polish, "apply 3-point polishing to a max-min result");
  auto* solve_threads =
      sc->add_option("-t,--threads", solve.threads, "worker threads, 0 = all cores");
  sc->add_option("-o,--output-format", solve.output_format, "json|csv")->capture_default_str();

  std::string v_input = "-";
  std::string v_format;
  auto* vc = app.add_subcommand("validate", "check that the input is a valid front");
  vc->add_option("-i,--input", v_input, "point file, '-' for stdin");
  vc->add_option("--format", v_format, "csv|json");

  std::string g_shape = "staircase";
  std::size_t g_n = 0;
  std::uint64_t g_seed = 0;
  std::string g_output = "-";
  std::string g_format;
  auto* gc = app.add_subcommand("generate", "write a synthetic front");
  gc->add_option("--shape", g_shape, "affine|convex-arc|concave-arc|staircase|clustered")
      ->capture_default_str();
  gc->add_option("-n,--n", g_n, "number of points")->required()->check(CLI::PositiveNumber);
  gc->add_option("--seed", g_seed, "generator seed")->capture_default_str();
  gc->add_option("-o,--output", g_output, "output file, '-' for stdout")->capture_default_str();
  gc->add_option("--format", g_format, "csv|json (default by extension)");

  BenchArgs bench;
  auto* bc = app.add_subcommand("bench", "time a DP solver over growing n");
  bc->add_option("-v,--variant", bench.variant, "max-min|max-sum-neighbor|max-sum-min")
      ->capture_default_str();
  bc->add_option("--sizes", bench.sizes, "ascending front sizes")->required()->delimiter(',');
  bc->add_option("-p,--p", bench.p, "selection size")->capture_default_str();
  bc->add_option("--shape", bench.shape, "generator shape")->capture_default_str();
  bc->add_option("--repeats", bench.repeats, "runs per size (>= 3)")->capture_default_str();
  auto* bench_threads = bc->add_option("-t,--threads", bench.threads, "0 = all cores");
  bc->add_option("--seed", bench.seed, "generator seed")->capture_default_str();
  bc->add_flag("--json", bench.json, "JSON instead of a table");

  std::string c_input = "-";
  std::string c_format;
  std::size_t c_p = 0;
  double c_alpha = 1.0;
  bool c_json = false;
  auto* cc = app.add_subcommand("compare", "optimal selections for all five variants");
  cc->add_option("-i,--input", c_input, "point file, '-' for stdin");
  cc->add_option("--format", c_format, "csv|json");
  cc->add_option("-p,--p", c_p, "selection size")->required();
  cc->add_option("-a,--alpha", c_alpha, "distance exponent")->capture_default_str();
  cc->add_flag("--json", c_json, "JSON instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  return guarded(err, [&]() -> int {
    if (*sc) return cmd_solve(solve, solve_threads->count() > 0, out, err);
    if (*vc) return cmd_validate(v_input, v_format, out, err);
    if (*gc) return cmd_generate(g_shape, g_n, g_seed, g_output, g_format, out, err);
    if (*bc) return cmd_bench(bench, bench_threads->count() > 0, out, err);
    return cmd_compare(c_input, c_format, c_p, c_alpha, c_json, out, err);
  });
}

}  // namespace pfdisp::cli
