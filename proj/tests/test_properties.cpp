#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace hermann;
using checks::Tally;

TEST(Properties, GradientMatchesFiniteDifferences) {
  for (const auto& t : catalog()) {
    Tally tally;
    checks::gradient_vs_differences(t, 25, tally);
    EXPECT_TRUE(tally.ok()) << tally.first_failure;
  }
}

TEST(Properties, HessianNegativeDefinite) {
  for (const auto& t : catalog()) {
    Tally tally;
    checks::hessian_negative(t, 25, tally);
    EXPECT_TRUE(tally.ok()) << tally.first_failure;
  }
}

TEST(Properties, ImplicationsAndDimensionsAtTablePoints) {
  Tally impl, dims;
  checks::table_points(impl, dims);
  EXPECT_TRUE(impl.ok()) << impl.first_failure;
  EXPECT_TRUE(dims.ok()) << dims.first_failure;
}

TEST(Properties, ConditionsImplyMinimalOnTwelfths) {
  for (const auto& t : catalog()) {
    Tally tally;
    long hits = 0;
    checks::conditions_imply_minimal(t, 12, tally, &hits);
    EXPECT_TRUE(tally.ok()) << tally.first_failure;
    EXPECT_GT(hits, 0) << t.id;
  }
}

TEST(Properties, RationalGridHasExpectedSize) {
  // Fractions in [0, 1] with denominator <= 12: 1 + sum of phi(d) = 47.
  EXPECT_EQ(checks::rational_grid(Rational(0), Rational(1), 12).size(), 47u);
}

// Trace of the shape operator equals -<H, v>, i.e. minus the gradient of the log-volume along v.
TEST(Properties, TraceIdentity) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& t : catalog()) {
    FaceEnumeration fe = enumerate_faces(t);
    const Face& f = checks::open_face(fe);
    for (const auto& y : checks::interior_samples(f, 5, 9)) {
      auto x = f.ambient(y);
      CellPoint z({Angle::radians(x[0]), Angle::radians(x[1])});
      ShapeSpectrum s = shape_spectrum(t, z);
      auto h = mean_curvature_components(t, z);
      std::vector<double> v = {u(rng), u(rng)};
      double trace = 0;
      for (double e : s.eigenvalues(v)) trace += e;
      EXPECT_NEAR(trace, -(h[0].to_double() * v[0] + h[1].to_double() * v[1]), 1e-9) << t.id;
    }
  }
}

// The root-functional austerity test agrees with checking eigenvalue
// multisets numerically along random normal directions.
TEST(Properties, AusterityAgreesWithSampledSpectra) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const auto& t : catalog()) {
    for (const char* zs : {"0,pi/4", "pi/4,0", "pi/4,pi/4", "pi/3,-pi/6", "0,0", "pi/6,0"}) {
      CellPoint z = parse_cell_point(zs);
      if (!checks::in_closed_cell(t, z)) continue;
      ShapeSpectrum s = shape_spectrum(t, z);
      bool sampled = true;
      for (int k = 0; k < 100 && sampled; ++k) {
        auto e = s.eigenvalues({u(rng), u(rng)});
        auto neg = e;
        for (double& x : neg) x = -x;
        std::sort(e.begin(), e.end());
        std::sort(neg.begin(), neg.end());
        for (std::size_t i = 0; i < e.size(); ++i) sampled = sampled && std::fabs(e[i] - neg[i]) < 1e-9;
      }
      EXPECT_EQ(is_austere(s), sampled) << t.id << " " << zs;
    }
  }
}

TEST(Properties, SolverUniquenessOnOneTriad) {
  Tally tally;
  checks::solver_uniqueness(triad_by_name("g2xg2-g2-dual"), 5, 1e-8, tally);
  EXPECT_TRUE(tally.ok()) << tally.first_failure;
}
