#include <gtest/gtest.h>

#include "hermann/json_io.hpp"

using namespace hermann;

TEST(Json, AngleRoundTrip) {
  for (Angle a : {Angle::pi_times(-1, 6), Angle::pi_times(0), Angle::radians(0.4205343352839652)}) {
    EXPECT_EQ(angle_from_json(angle_to_json(a)), a);
  }
  EXPECT_EQ(angle_to_json(Angle::pi_times(1, 3)).dump(), R"({"pi_rational":[1,3]})");
}

TEST(Json, ValueRoundTrip) {
  for (ExactValue v : {ExactValue(Rational(2), Rational(-1, 3)), ExactValue::infinite(), ExactValue::numeric(0.25)}) {
    Json j = value_to_json(v);
    ExactValue back = value_from_json(j);
    EXPECT_EQ(value_to_json(back), j);
  }
}

TEST(Json, TriadRoundTripForWholeCatalog) {
  for (const auto& t : catalog()) EXPECT_EQ(triad_from_json(triad_to_json(t)), t) << t.id;
}

TEST(Json, TriadSchemaErrors) {
  EXPECT_THROW(triad_from_json(Json::parse(R"({"rank": 2})")), ParseError);
  EXPECT_THROW(triad_from_json(Json::parse(R"([1, 2])")), ParseError);
}

TEST(Json, ReportRoundTrip) {
  const auto& t = triad_by_name("su3-so3-dual");
  for (const char* z : {"pi/3,-pi/6", "0,0", "0,pi/2", "0.1,0.2"}) {
    OrbitReport r = classify(t, parse_cell_point(z));
    Json j = report_to_json(r);
    EXPECT_EQ(report_to_json(report_from_json(j)), j) << z;
  }
}

TEST(Svg, DeterministicAndLabelled) {
  const auto& t = triad_by_name("su3-so3-dual");
  std::vector<MarkedPoint> pts = {{parse_cell_point("pi/3,-pi/6"), "Z"}, {parse_cell_point("0,0"), "O"}};
  const std::string a = emit_cell_svg(t, pts), b = emit_cell_svg(t, pts);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("<svg"), std::string::npos);
  EXPECT_NE(a.find(">Z<"), std::string::npos);
}

TEST(Svg, EmptyMarkedSetDrawsOutlineOnly) {
  const std::string s = emit_cell_svg(triad_by_name("su3-so3-dual"), {});
  EXPECT_NE(s.find("<polygon"), std::string::npos);
  EXPECT_EQ(s.find("<circle"), std::string::npos);
}

TEST(Svg, HyperplaneNamesOnBoundary) {
  const std::string s = emit_cell_svg(triad_by_name("so10-u5-dual"), {});
  EXPECT_NE(s.find("(2b1+b2)^-1(pi/2)"), std::string::npos);
}

TEST(Svg, RejectsOtherRanks) {
  EXPECT_THROW(emit_cell_svg(example_triad(3, 0), {}), std::invalid_argument);
  EXPECT_THROW(emit_cell_svg(example_triad(1, 1), {}), std::invalid_argument);
}
