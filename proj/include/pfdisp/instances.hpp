#pragma once

// Synthetic fronts, point ingestion and result serialization.
//
// Input CSV: one "x,y" pair per line, optional "x,y" header as first data
// line, '#' comment lines and blank lines ignored.
// Input JSON: an array of 2-element number arrays.
// Output JSON: {"variant","p","alpha","n","method","indices","points","cost",
// "secondary_cost","elapsed_ms"}; indices are 0-based sorted-front positions.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfdisp/front.hpp"
#include "pfdisp/oracle.hpp"

namespace pfdisp::io {

enum class ShapeKind { Affine, ConvexArc, ConcaveArc, Staircase, Clustered };

inline constexpr ShapeKind kAllShapes[] = {ShapeKind::Affine, ShapeKind::ConvexArc,
                                           ShapeKind::ConcaveArc, ShapeKind::Staircase,
                                           ShapeKind::Clustered};

std::string to_string(ShapeKind kind);
std::optional<ShapeKind> parse_shape(std::string_view name);

struct FrontShape {
  ShapeKind kind = ShapeKind::Staircase;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// Deterministic in (kind, n, seed). Strictly monotone by construction.
SortedFront generate(const FrontShape& shape);

enum class Format { CSV, JSON };

std::vector<Point2> read_points(std::istream& in, Format format);
std::vector<Point2> read_points_file(const std::string& path, std::optional<Format> format = {});

/// Format from the file extension (.json -> JSON, anything else CSV).
Format guess_format(std::string_view path);

void write_points(std::ostream& out, const SortedFront& front, Format format);

struct SelectionReport {
  const Selection& selection;
  const SortedFront& front;
  DispersionParams params;
  double elapsed_ms = 0.0;
};

/// Serializes a selection; the cost is re-verified against dispersion_cost
/// (std::logic_error on mismatch beyond 1e-9 relative).
void write_selection(std::ostream& out, const SelectionReport& report, Format format);

/// Shortest decimal representation that round-trips.
std::string format_real(double v);

}  // namespace pfdisp::io
