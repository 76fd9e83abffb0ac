#include "pfdisp/instances.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pfdisp::io {

namespace {

// Positive increments in [0.5, 1.5) normalized to sum to `span`; prefix sums
// start at `offset`.
std::vector<double> spaced(std::size_t n, double offset, double span, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> step(0.5, 1.5);
  std::vector<double> inc(n);
  double total = 0.0;
  for (auto& v : inc) total += (v = step(rng));
  std::vector<double> out(n);
  double acc = offset;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = acc;
    acc += inc[i] * span / total;
  }
  return out;
}

std::vector<Point2> staircase(std::size_t n, std::mt19937_64& rng, bool clustered) {
  std::uniform_real_distribution<double> step(0.1, 1.0);
  std::uniform_real_distribution<double> gap(20.0, 50.0);
  const auto group = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(double(n))));
  std::vector<double> dx(n);
  std::vector<double> dy(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool jump = clustered && i > 0 && i % group == 0;
    dx[i] = step(rng) + (jump ? gap(rng) : 0.0);
    dy[i] = step(rng) + (jump ? gap(rng) : 0.0);
  }
  std::vector<Point2> pts(n);
  double x = 0.0;
  for (std::size_t i = 0; i < n; ++i) pts[i].x = (x += dx[i]);
  // y decreases: built as a suffix sum so every step stays positive.
  double y = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    pts[i].y = y;
    if (i > 0) y += dy[i];
  }
  return pts;
}

Point2 parse_pair(std::string_view line, std::size_t line_no) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected x,y", line_no);
  auto number = [&](std::string_view field) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
      field.remove_suffix(1);
    double v = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc() || ptr != end || field.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'",
                       line_no);
    }
    if (!std::isfinite(v)) {
      throw NonFiniteError("line " + std::to_string(line_no) + ": non-finite value");
    }
    return v;
  };
  const auto rest = line.substr(comma + 1);
  if (rest.find(',') != std::string_view::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": expected exactly two fields", line_no);
  }
  return {number(line.substr(0, comma)), number(rest)};
}

bool is_header(std::string_view line) {
  std::string compact;
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r') compact.push_back(c);
  return compact == "x,y";
}

std::vector<Point2> read_csv(std::istream& in) {
  std::vector<Point2> pts;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    const auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '#') continue;
    if (!seen_data && is_header(view)) {
      seen_data = true;
      continue;
    }
    seen_data = true;
    pts.push_back(parse_pair(view, line_no));
  }
  return pts;
}

std::vector<Point2> read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of [x, y] pairs", 0);
  std::vector<Point2> pts;
  pts.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw ParseError("element " + std::to_string(i) + " is not a [x, y] pair", i);
    }
    const Point2 p{item[0].get<double>(), item[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw NonFiniteError("element " + std::to_string(i) + ": non-finite value");
    }
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Affine:
      return "affine";
    case ShapeKind::ConvexArc:
      return "convex-arc";
    case ShapeKind::ConcaveArc:
      return "concave-arc";
    case ShapeKind::Staircase:
      return "staircase";
    case ShapeKind::Clustered:
      return "clustered";
  }
  return "unknown";
}

std::optional<ShapeKind> parse_shape(std::string_view name) {
  for (auto k : kAllShapes)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

SortedFront generate(const FrontShape& shape) {
  if (shape.n < 1) throw InfeasibleSize("generate: n must be >= 1");
  const std::size_t n = shape.n;
  std::mt19937_64 rng(shape.seed);
  std::vector<Point2> pts(n);
  const double size = static_cast<double>(n);

  switch (shape.kind) {
    case ShapeKind::Affine: {
      // Slope -1 on [0, n].
      const auto xs = spaced(n, 0.0, size, rng);
      for (std::size_t i = 0; i < n; ++i) pts[i] = {xs[i], size - xs[i]};
      break;
    }
    case ShapeKind::ConvexArc:
    case ShapeKind::ConcaveArc: {
      // Angles stay away from the axes so neither coordinate flattens out.
      constexpr double margin = 0.01;
      const auto theta = spaced(n, margin, std::numbers::pi / 2 - 2 * margin, rng);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = theta[n - 1 - i];  // decreasing angle gives increasing x
        if (shape.kind == ShapeKind::ConvexArc) {
          pts[i] = {size * std::cos(t), size * std::sin(t)};
        } else {
          pts[i] = {size * (1.0 - std::sin(t)), size * (1.0 - std::cos(t))};
        }
      }
      break;
    }
    case ShapeKind::Staircase:
      pts = staircase(n, rng, false);
      break;
    case ShapeKind::Clustered:
      pts = staircase(n, rng, true);
      break;
  }
  return sort_front(pts);
}

std::vector<Point2> read_points(std::istream& in, Format format) {
  return format == Format::CSV ? read_csv(in) : read_json(in);
}

Format guess_format(std::string_view path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? Format::JSON : Format::CSV;
}

std::vector<Point2> read_points_file(const std::string& path, std::optional<Format> format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_points(in, format.value_or(guess_format(path)));
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_points(std::ostream& out, const SortedFront& front, Format format) {
  if (format == Format::CSV) {
    out << "x,y\n";
    for (const auto& p : front.points()) out << format_real(p.x) << ',' << format_real(p.y) << '\n';
    return;
  }
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& p : front.points()) doc.push_back({p.x, p.y});
  out << doc.dump() << '\n';
}

void write_selection(std::ostream& out, const SelectionReport& report, Format format) {
  const Selection& s = report.selection;
  const double check = dispersion_cost(report.front, s.indices, s.variant, report.params);
  if (std::abs(check - s.cost) > 1e-9 * std::max(1.0, std::abs(check))) {
    throw std::logic_error("selection cost " + format_real(s.cost) +
                           " does not match recomputed " + format_real(check));
  }

  if (format == Format::CSV) {
    out << "index,x,y\n";
    for (auto i : s.indices) {
      out << i << ',' << format_real(report.front[i].x) << ',' << format_real(report.front[i].y)
          << '\n';
    }
    return;
  }

  nlohmann::ordered_json doc;
  doc["variant"] = to_string(s.variant);
  doc["p"] = s.p;
  doc["alpha"] = report.params.alpha();
  doc["n"] = report.front.size();
  doc["method"] = to_string(s.method);
  doc["indices"] = s.indices;
  auto pts = nlohmann::ordered_json::array();
  for (auto i : s.indices) pts.push_back({report.front[i].x, report.front[i].y});
  doc["points"] = std::move(pts);
  doc["cost"] = s.cost;
  doc["secondary_cost"] = s.secondary_cost ? nlohmann::ordered_json(*s.secondary_cost)
                                           : nlohmann::ordered_json(nullptr);
  doc["elapsed_ms"] = report.elapsed_ms;
  out << doc.dump() << '\n';
}

}  // namespace pfdisp::io
