#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermann/solver.hpp"

namespace hermann {

/// A free-parameter row such as (a3, pi/2 - 2 a3): Z = base + sum_k p_k * directions[k],
/// with every parameter p_k required to avoid the listed classes mod pi.
struct FreePattern {
  std::vector<Rational> base;                  // units of pi
  std::vector<std::vector<int>> directions;    // one per parameter
  std::vector<std::string> parameters;         // names for messages
  std::vector<Rational> excluded = {Rational(1, 6), Rational(1, 3), Rational(1, 4), Rational(3, 4)};
};

struct ExpectedRow {
  int table = 0;
  std::string label;              // printed (a, b), e.g. "(arctan sqrt5, pi/2 - 2 arctan sqrt5)"
  std::optional<CellPoint> point; // exact, or closed form evaluated numerically
  std::optional<CellPoint> alternate;  // second printed form of the same row, if any
  std::string alternate_label;
  std::optional<FreePattern> pattern;
  std::string theorem_label;      // "as in Theorem F" / "as in Theorem C" / "not as in Theorems C-F"
  std::string shape_label;        // "one-point set" / "totally geodesic" / "not austere" / "austere"
  int dim = 0;
};

struct ExpectedTable {
  int id = 0;
  std::string triad;  // catalog slug
  std::vector<ExpectedRow> rows;
};

/// Tables 4-14 as printed.
const std::vector<ExpectedTable>& expected_tables();
const ExpectedTable& expected_table(int id);  // throws std::out_of_range

struct RowResult {
  ExpectedRow expected;
  bool matched = false;      // a solver point corresponds to the row
  bool point_ok = false;
  bool dim_ok = false;
  bool classification_ok = false;
  bool pass = false;
  std::optional<CellPoint> found;
  int found_dim = -1;
  std::string found_theorem;
  std::string found_shape;
  std::vector<std::string> messages;
};

struct TableReport {
  int table = 0;
  std::string triad;
  std::size_t solution_count = 0;
  std::vector<RowResult> rows;
  std::vector<MinimalOrbit> extras;  // solver points matched by no row
  int passed() const;
  bool all_pass() const;
};

TableReport reproduce_table(int table_id, const EnumerateOptions& opts = {});
/// Same, reusing an existing enumeration.
TableReport reproduce_table(const ExpectedTable& table, const MinimalOrbitSet& set, double tol = kDefaultTolerance);

struct Prop41Result {
  std::string triad;
  CellPoint z;
  bool austere = false;
  bool totally_geodesic = false;
  bool tag_B = false;
  bool pass = false;
};

std::vector<Prop41Result> check_proposition_4_1(double tol = kDefaultTolerance);

struct ExampleResult {
  int example = 0;
  int n = 0;
  CellPoint z;
  bool index_collision = false;
  bool condition_I = false;
  bool minimal = false;
  bool austere = false;
  bool sets_available = false;  // the example displays the congruence sets
  std::size_t computed_pi3 = 0, displayed_pi3 = 0;
  std::size_t computed_2pi3 = 0, displayed_2pi3 = 0;
  bool sets_match = false;      // the displayed sets equal the computed ones as sets
  bool pass = false;
  std::vector<std::string> messages;
};

/// Examples 1-4 for n = 0..n_max (Example 3 has no n and is checked once).
std::vector<ExampleResult> check_examples(int n_max);

/// Root vectors listed by the displayed set descriptions of Examples 1, 2
/// and 4, as (pi/3 set, 2pi/3 set).
std::pair<std::vector<RootVector>, std::vector<RootVector>> displayed_congruence_sets(int example, int n);

std::string render_text(const TableReport& r);
std::string render_text(const std::vector<Prop41Result>& r);
std::string render_text(const std::vector<ExampleResult>& r);
std::string render_text(const OrbitReport& r, const SymmetricTriad& t);
std::string render_text(const MinimalOrbitSet& s, const SymmetricTriad& t, bool verbose);
std::string render_text(const SymmetricTriad& t);

}  // namespace hermann
