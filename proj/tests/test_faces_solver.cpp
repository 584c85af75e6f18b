#include <cmath>

#include <gtest/gtest.h>

#include "hermann/solver.hpp"

using namespace hermann;

TEST(Faces, TriangleHasSevenFaces) {
  FaceEnumeration fe = enumerate_faces(triad_by_name("su3-so3-dual"));
  EXPECT_TRUE(fe.complete);
  ASSERT_EQ(fe.faces.size(), 7u);
  int by_dim[3] = {0, 0, 0};
  for (const auto& f : fe.faces) ++by_dim[f.dimension];
  EXPECT_EQ(by_dim[0], 3);
  EXPECT_EQ(by_dim[1], 3);
  EXPECT_EQ(by_dim[2], 1);
}

TEST(Faces, EveryRankTwoCatalogCellIsATriangle) {
  for (const auto& t : catalog()) {
    FaceEnumeration fe = enumerate_faces(t);
    EXPECT_EQ(fe.faces.size(), 7u) << t.id;
  }
}

TEST(Faces, HyperplaneLabels) {
  const auto& t = triad_by_name("so10-u5-dual");
  FaceEnumeration fe = enumerate_faces(t);
  bool found = false;
  for (const auto& h : fe.hyperplanes) found = found || h.label(t) == "(2b1+b2)^-1(pi/2)";
  EXPECT_TRUE(found);
}

TEST(Faces, InteriorPointsAreStrictlyInside) {
  for (const auto& t : catalog()) {
    FaceEnumeration fe = enumerate_faces(t);
    for (const auto& f : fe.faces) {
      if (f.dimension == 0) continue;
      EXPECT_GT(f.inradius, 0.0);
      EXPECT_TRUE(strictly_inside(fe, f, f.ambient(f.interior_point))) << t.id;
    }
  }
}

TEST(LogVolume, ValueAtTable4Interior) {
  const auto& t = triad_by_name("su3-so3-dual");
  FaceEnumeration fe = enumerate_faces(t);
  const Face& open = fe.faces.back();
  ASSERT_EQ(open.dimension, 2);
  // log sin(pi/3) + log cos(-pi/6) + log cos(pi/6) = 3 log(sqrt3/2)
  const double v = log_volume(t, open, {kPi / 3, -kPi / 6});
  EXPECT_NEAR(v, 3 * std::log(std::sqrt(3.0) / 2), 1e-13);
  EXPECT_NEAR(v, -0.43152, 1e-5);
  EXPECT_THROW(log_volume(t, open, {0.0, 0.0}), DomainError);
}

TEST(Solver, SolvesTable4Interior) {
  const auto& t = triad_by_name("su3-so3-dual");
  FaceEnumeration fe = enumerate_faces(t);
  FaceSolution s = solve_face(t, fe, fe.faces.back());
  ASSERT_TRUE(s.z.has_value());
  EXPECT_TRUE(s.diagnostics.converged);
  EXPECT_TRUE(s.diagnostics.snapped);
  EXPECT_EQ(*s.z, parse_cell_point("pi/3,-pi/6"));
}

TEST(Solver, Table6ArctanPoint) {
  const auto& t = triad_by_name("so10-u5-dual");
  MinimalOrbitSet s = enumerate_minimal_orbits(t);
  const double a = std::atan(std::sqrt(7.0 / 3));
  bool found = false;
  for (const auto& m : s.solutions) {
    auto x = m.z.to_radians();
    found = found || (std::fabs(x[0] - a) < 1e-9 && std::fabs(x[1] - (kPi / 2 - 2 * a)) < 1e-9);
  }
  EXPECT_TRUE(found);
}

TEST(Solver, SevenSolutionsOnTriangles) {
  for (const char* id : {"su3-so3-dual", "su6-sp3-dual", "so10-u5-dual", "so5xso5-so5-dual", "sp2-u2-dual",
                         "sp2xsp2-sp2-dual-sp2r", "sp2xsp2-sp2-dual-sp11", "e6-f4-dual"}) {
    MinimalOrbitSet s = enumerate_minimal_orbits(triad_by_name(id));
    EXPECT_EQ(s.solutions.size(), 7u) << id;
    EXPECT_TRUE(s.notes.empty()) << id;
    for (const auto& m : s.solutions) EXPECT_TRUE(m.report.minimal) << id << " " << m.z.to_string();
  }
}

// b2 (6) and 2b1+b2 (5) are swapped by the reflection in b1 = 0 but carry
// different multiplicities, so edge maximisers keep a normal mean-curvature
// component. They are reported, not dropped.
TEST(Solver, AsymmetricMultiplicitiesAreFlagged) {
  MinimalOrbitSet s = enumerate_minimal_orbits(triad_by_name("e6-spin10u1-dual"));
  EXPECT_EQ(s.solutions.size(), 7u);
  int non_minimal = 0;
  for (const auto& m : s.solutions) non_minimal += !m.report.minimal;
  EXPECT_EQ(non_minimal, 3);
  EXPECT_EQ(s.notes.size(), 3u);
  // On b1 = 0 the two components are 2cot2a - 19tan a and 2cot2a - 20tan a.
  for (const auto& m : s.solutions) {
    auto x = m.z.to_radians();
    if (m.z.coords[0].is_exact() && x[0] == 0.0 && !m.report.minimal) {
      const double a = x[1];
      EXPECT_NEAR(2 / std::tan(2 * a) - 20 * std::tan(a), 0.0, 1e-9);
      EXPECT_NEAR(m.report.mean_curvature[0].to_double(), std::tan(a), 1e-9);
    }
  }
}

TEST(Solver, ParallelMatchesSerial) {
  const auto& t = triad_by_name("g2xg2-g2-dual");
  EnumerateOptions par;
  par.parallel = true;
  auto a = enumerate_minimal_orbits(t), b = enumerate_minimal_orbits(t, par);
  ASSERT_EQ(a.solutions.size(), b.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) EXPECT_EQ(a.solutions[i].z, b.solutions[i].z);
}

TEST(Solver, RandomStartsStayInsideTheFace) {
  const auto& t = triad_by_name("g2-so4-dual");
  FaceEnumeration fe = enumerate_faces(t);
  for (const auto& f : fe.faces) {
    if (f.dimension == 0) continue;
    for (const auto& y : random_face_starts(f, 20, 3)) EXPECT_TRUE(strictly_inside(fe, f, f.ambient(y)));
  }
}
