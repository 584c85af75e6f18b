#include <set>

#include <gtest/gtest.h>

#include "hermann/report.hpp"

using namespace hermann;

TEST(Tables, RowCounts) {
  std::size_t rows = 0;
  for (const auto& t : expected_tables()) {
    rows += t.rows.size();
    EXPECT_NE(find_triad(t.triad), nullptr) << t.id;
  }
  EXPECT_EQ(expected_tables().size(), 11u);
  EXPECT_EQ(rows, 75u);
  EXPECT_THROW(expected_table(3), std::out_of_range);
}

TEST(Tables, Table4PassesCompletely) {
  TableReport r = reproduce_table(4);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.solution_count, 7u);
  EXPECT_TRUE(r.extras.empty());
}

TEST(Tables, Table6MatchesThroughTheFigureForm) {
  TableReport r = reproduce_table(6);
  EXPECT_TRUE(r.all_pass());
  bool noted = false;
  for (const auto& row : r.rows) noted = noted || (!row.messages.empty() && row.expected.alternate.has_value());
  EXPECT_TRUE(noted);
}

TEST(Tables, G2ExtrasAreReported) {
  TableReport r = reproduce_table(13);
  EXPECT_EQ(r.rows.size(), 6u);
  for (const auto& row : r.rows) EXPECT_TRUE(row.matched) << row.expected.label;
  EXPECT_TRUE(r.all_pass());
  // (0, -pi/2) and (0, pi/2) are the same orbit, so two solver points are unlisted.
  EXPECT_EQ(r.solution_count, 7u);
  EXPECT_EQ(r.extras.size(), 2u);
}

TEST(Prop41, AllFifteenPointsAustere) {
  auto r = check_proposition_4_1();
  ASSERT_EQ(r.size(), 15u);
  for (const auto& x : r) EXPECT_TRUE(x.pass) << x.triad << " " << x.z.to_string();
}

namespace {

// Direct enumeration of the coordinate sums b_i + ... + b_j over index pairs,
// reduced mod 1 (units of pi), for the A_r family.
std::pair<int, int> count_a_family(int n) {
  const int r = 3 * n + 2;
  std::vector<int> z(r, 0);  // units of pi/3
  z[n] = 1;
  z[2 * n + 1] = 1;
  int p3 = 0, p23 = 0;
  for (int i = 0; i < r; ++i) {
    int s = 0;
    for (int j = i; j < r; ++j) {
      s += z[j];
      p3 += s % 3 == 1;
      p23 += s % 3 == 2;
    }
  }
  return {p3, p23};
}

}  // namespace

TEST(Examples, AFamilyCountsMatchDirectEnumeration) {
  for (int n = 0; n <= 3; ++n) {
    auto [d3, d23] = displayed_congruence_sets(1, n);
    auto [c3, c23] = count_a_family(n);
    EXPECT_EQ(static_cast<int>(d3.size()), c3) << n;
    EXPECT_EQ(static_cast<int>(d23.size()), c23) << n;
  }
  // n = 1: 8 roots at pi/3 and 4 at 2pi/3.
  EXPECT_EQ(count_a_family(1), std::make_pair(8, 4));
}

TEST(Examples, CFamilyDisplayedCounts) {
  // Sizes of the printed set descriptions from an independent enumeration, n = 1..3.
  const std::pair<std::size_t, std::size_t> expected[] = {{11, 7}, {27, 18}, {50, 34}};
  for (int n = 1; n <= 3; ++n) {
    auto [d3, d23] = displayed_congruence_sets(4, n);
    EXPECT_EQ(d3.size(), expected[n - 1].first) << n;
    EXPECT_EQ(d23.size(), expected[n - 1].second) << n;
  }
}

TEST(Examples, ResultsForSmallN) {
  auto r = check_examples(3);
  ASSERT_EQ(r.size(), 13u);
  for (const auto& x : r) {
    EXPECT_TRUE(x.condition_I) << x.example << "/" << x.n;
    EXPECT_TRUE(x.minimal) << x.example << "/" << x.n;
    EXPECT_FALSE(x.austere) << x.example << "/" << x.n;
  }
  for (const auto& x : r) {
    if (x.example == 4 && x.n == 0) {
      EXPECT_TRUE(x.index_collision);
      EXPECT_FALSE(x.sets_match);
    } else {
      EXPECT_TRUE(x.pass) << x.example << "/" << x.n;
    }
  }
}
