#include <gtest/gtest.h>

#include "hermann/root_geometry.hpp"
#include "hermann/solver.hpp"

using namespace hermann;

TEST(Catalog, SixteenEntriesAllValid) {
  EXPECT_EQ(catalog().size(), 16u);
  for (const auto& t : catalog()) EXPECT_TRUE(validate(t).empty()) << t.id;
}

TEST(Catalog, LookupByIdAndName) {
  EXPECT_NE(find_triad("e6-f4-dual"), nullptr);
  EXPECT_EQ(find_triad("nope"), nullptr);
  EXPECT_THROW(triad_by_name("nope"), std::out_of_range);
  const auto& t = triad_by_name("su3-so3-dual");
  EXPECT_EQ(t.rank, 2);
  EXPECT_EQ(t.roots.size(), 3u);
}

TEST(Catalog, AmbientDimensionIsRankPlusMultiplicities) {
  for (const auto& t : catalog()) {
    ASSERT_TRUE(t.ambient_dim.has_value()) << t.id;
    EXPECT_EQ(*t.ambient_dim, t.rank + t.centralizer_dim + t.total_multiplicity()) << t.id;
  }
}

TEST(Validate, RejectsBrokenTriads) {
  SymmetricTriad t;
  t.rank = 2;
  t.roots = {{{1, 0}, 0, 0}, {{1}, 1, 0}};
  EXPECT_FALSE(validate(t).empty());
}

// Root counts of the example families: A_r has r(r+1)/2 positive roots,
// C_r has r^2.
TEST(Examples, TriadSizes) {
  for (int n = 0; n <= 3; ++n) {
    const int r = 3 * n + 2;
    EXPECT_EQ(example_triad(1, n).roots.size(), static_cast<std::size_t>(r * (r + 1) / 2));
    EXPECT_EQ(example_triad(4, n).roots.size(), static_cast<std::size_t>(r * r));
    EXPECT_TRUE(validate(example_triad(2, n)).empty());
  }
  EXPECT_EQ(example_triad(3, 0).rank, 1);
  EXPECT_THROW(example_triad(5, 0), std::invalid_argument);
}

TEST(CellPoint, ParseAndEvaluate) {
  CellPoint z = parse_cell_point("pi/3, -pi/6");
  ASSERT_EQ(z.rank(), 2u);
  EXPECT_TRUE(z.is_exact());
  EXPECT_EQ(z.evaluate({2, 1}).pi_multiple(), Rational(1, 2));
  EXPECT_FALSE(parse_cell_point("0.1,0.2").is_exact());
  EXPECT_THROW(parse_cell_point(""), ParseError);
}

TEST(RootGeometry, CartanMatricesOfCatalog) {
  auto g2 = RootGeometry::from_triad(triad_by_name("g2-so4-dual"));
  ASSERT_TRUE(g2.has_value());
  const auto& c = g2->cartan();
  EXPECT_EQ(c[0][0], 2);
  EXPECT_EQ(c[0][1] * c[1][0], 3);
  auto a2 = RootGeometry::from_triad(triad_by_name("su3-so3-dual"));
  ASSERT_TRUE(a2.has_value());
  EXPECT_EQ(a2->cartan()[0][1], -1);
}

TEST(RootGeometry, ReflectionIsInvolution) {
  const auto& t = triad_by_name("so5xso5-so5-dual");
  auto g = RootGeometry::from_triad(t);
  ASSERT_TRUE(g.has_value());
  CellPoint z = parse_cell_point("pi/5,pi/7");
  for (const auto& r : t.roots) {
    CellPoint w = g->reflect(g->reflect(z, r.root, Angle::pi_times(1, 2)), r.root, Angle::pi_times(1, 2));
    EXPECT_EQ(w, z) << root_to_string(r.root);
  }
}

TEST(ReduceToCell, MapsOutsidePointsInsideAndIsIdempotent) {
  const auto& t = triad_by_name("g2-so4-dual");
  CellPoint in = reduce_to_cell(t, parse_cell_point("0,-pi/2"));
  EXPECT_EQ(in, parse_cell_point("0,pi/2"));
  EXPECT_EQ(reduce_to_cell(t, parse_cell_point("pi/2,-pi/2")), parse_cell_point("0,0"));
  for (const char* s : {"pi/3,-pi/2", "0.3,0.1", "2,2", "-1,0.5"}) {
    CellPoint once = reduce_to_cell(t, parse_cell_point(s));
    EXPECT_EQ(reduce_to_cell(t, once), once) << s;
  }
}
