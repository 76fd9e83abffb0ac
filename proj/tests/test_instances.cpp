#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "pfdisp/instances.hpp"
#include "pfdisp/maxmin.hpp"
#include "support.hpp"

namespace pfdisp {
namespace {

TEST(Generate, EveryShapeIsValidAndDeterministic) {
  for (auto shape : io::kAllShapes) {
    for (std::size_t n : {1, 2, 5, 64, 1000}) {
      const auto a = io::generate({shape, n, 42});
      const auto b = io::generate({shape, n, 42});
      ASSERT_EQ(a.size(), n);
      ASSERT_TRUE(validate(a.points()).ok) << io::to_string(shape) << " n=" << n;
      ASSERT_TRUE(std::equal(a.points().begin(), a.points().end(), b.points().begin()));
    }
    EXPECT_EQ(io::parse_shape(io::to_string(shape)), shape);
  }
  EXPECT_THROW(io::generate({io::ShapeKind::Affine, 0, 1}), InfeasibleSize);
}

TEST(Generate, SeedsDiffer) {
  const auto a = io::generate({io::ShapeKind::Staircase, 50, 1});
  const auto b = io::generate({io::ShapeKind::Staircase, 50, 2});
  EXPECT_FALSE(std::equal(a.points().begin(), a.points().end(), b.points().begin()));
}

TEST(ReadPoints, CsvWithHeaderAndComments) {
  std::istringstream in("# a front\nx,y\n0,5\n\n 1, 3\n2,2\n5,0\n");
  const auto pts = io::read_points(in, io::Format::CSV);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[1], (Point2{1, 3}));
}

TEST(ReadPoints, CsvErrorsCarryLineNumbers) {
  std::istringstream bad("0,5\n1;3\n");
  try {
    io::read_points(bad, io::Format::CSV);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), 2u);
  }
  std::istringstream extra("0,5,1\n");
  EXPECT_THROW(io::read_points(extra, io::Format::CSV), ParseError);
  std::istringstream word("0,five\n");
  EXPECT_THROW(io::read_points(word, io::Format::CSV), ParseError);
  std::istringstream inf("0,inf\n");
  EXPECT_THROW(io::read_points(inf, io::Format::CSV), NonFiniteError);
}

TEST(ReadPoints, Json) {
  std::istringstream in("[[0,5],[1,3.5]]");
  const auto pts = io::read_points(in, io::Format::JSON);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1], (Point2{1, 3.5}));
  std::istringstream broken("[[0,5],[1,");
  EXPECT_THROW(io::read_points(broken, io::Format::JSON), ParseError);
  std::istringstream shape("[[0,5,1]]");
  EXPECT_THROW(io::read_points(shape, io::Format::JSON), ParseError);
  std::istringstream obj("{\"x\":1}");
  EXPECT_THROW(io::read_points(obj, io::Format::JSON), ParseError);
}

TEST(WritePoints, RoundTripsExactly) {
  for (auto fmt : {io::Format::CSV, io::Format::JSON}) {
    const auto f = io::generate({io::ShapeKind::ConvexArc, 200, 9});
    std::stringstream buf;
    io::write_points(buf, f, fmt);
    const auto back = io::read_points(buf, fmt);
    ASSERT_EQ(back.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) ASSERT_EQ(back[i], f[i]);
  }
}

TEST(GuessFormat, ByExtension) {
  EXPECT_EQ(io::guess_format("a/b.json"), io::Format::JSON);
  EXPECT_EQ(io::guess_format("a/b.csv"), io::Format::CSV);
  EXPECT_EQ(io::guess_format("b"), io::Format::CSV);
}

TEST(WriteSelection, JsonSchema) {
  const auto f = test::front_c();
  const auto s = maxmin::solve(f, 3, {});
  std::ostringstream out;
  io::write_selection(out, {s, f, DispersionParams(1.0), 1.5}, io::Format::JSON);
  const auto doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc["variant"], "max-min");
  EXPECT_EQ(doc["p"], 3);
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["method"], "dp");
  EXPECT_EQ(doc["indices"], nlohmann::json({0, 2, 3}));
  EXPECT_EQ(doc["points"][1], nlohmann::json({2.0, 2.0}));
  EXPECT_NEAR(doc["cost"].get<double>(), std::sqrt(13.0), 1e-15);
  EXPECT_TRUE(doc["secondary_cost"].is_null());
  EXPECT_EQ(doc["elapsed_ms"], 1.5);
}

TEST(WriteSelection, Csv) {
  const auto f = test::front_c();
  const auto s = maxmin::solve(f, 3, {});
  std::ostringstream out;
  io::write_selection(out, {s, f, {}, 0.0}, io::Format::CSV);
  EXPECT_EQ(out.str(), "index,x,y\n0,0,5\n2,2,2\n3,5,0\n");
}

TEST(WriteSelection, RefusesAWrongCost) {
  const auto f = test::front_c();
  auto s = maxmin::solve(f, 3, {});
  s.cost += 0.5;
  std::ostringstream out;
  EXPECT_THROW(io::write_selection(out, {s, f, {}, 0.0}, io::Format::JSON), std::logic_error);
}

TEST(FormatReal, ShortestRoundTrip) {
  EXPECT_EQ(io::format_real(0.1), "0.1");
  EXPECT_EQ(std::stod(io::format_real(std::sqrt(2.0))), std::sqrt(2.0));
}

}  // namespace
}  // namespace pfdisp
