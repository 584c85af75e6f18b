#include <stdexcept>

#include "hermann/report.hpp"

namespace hermann {

namespace {

const char* kF = "as in Theorem F";
const char* kC = "as in Theorem C";
const char* kNone = "not as in Theorems C-F";
const char* kPoint = "one-point set";
const char* kTG = "totally geodesic";
const char* kNA = "not austere";

ExpectedRow row(int table, const std::string& a, const std::string& b, const char* th, const char* shape, int dim) {
  ExpectedRow r;
  r.table = table;
  r.label = "(" + a + ", " + b + ")";
  r.point = CellPoint({Angle::parse(a), Angle::parse(b)});
  r.theorem_label = th;
  r.shape_label = shape;
  r.dim = dim;
  return r;
}

ExpectedRow free_row(int table, const std::string& label, std::vector<Rational> base, std::vector<std::vector<int>> dirs,
                     std::vector<std::string> params, int dim) {
  ExpectedRow r;
  r.table = table;
  r.label = label;
  FreePattern p;
  p.base = std::move(base);
  p.directions = std::move(dirs);
  p.parameters = std::move(params);
  r.pattern = p;
  r.theorem_label = kNone;
  r.shape_label = kNA;
  r.dim = dim;
  return r;
}

// Tables whose cell is the A2 triangle with vertices (0,-pi/2), (0,pi/2), (pi,-pi/2).
ExpectedTable a2_table(int id, std::string triad, int edge_dim, int interior_dim) {
  return {id,
          std::move(triad),
          {row(id, "0", "-pi/2", kF, kPoint, 0), row(id, "0", "pi/2", kF, kPoint, 0),
           row(id, "pi", "-pi/2", kF, kPoint, 0), row(id, "0", "0", kF, kTG, edge_dim),
           row(id, "pi/2", "0", kF, kTG, edge_dim), row(id, "pi/2", "-pi/2", kF, kTG, edge_dim),
           row(id, "pi/3", "-pi/6", kC, kNA, interior_dim)}};
}

ExpectedTable b2_table(int id, std::string triad) {
  return {id,
          std::move(triad),
          {row(id, "0", "-pi/2", kF, kPoint, 0), row(id, "0", "pi/2", kF, kPoint, 0),
           row(id, "pi/2", "-pi/2", kF, kTG, 4), row(id, "0", "0", kF, kTG, 6),
           row(id, "atan(sqrt(3))", "-pi/2", kNone, kNA, 6),
           row(id, "atan(sqrt(3))", "pi/2-2*atan(sqrt(3))", kNone, kNA, 6),
           row(id, "atan(1/sqrt(2))", "-atan(1/sqrt(2))", kNone, kNA, 8)}};
}

ExpectedTable c2_table(int id, std::string triad, int m) {
  return {id,
          std::move(triad),
          {row(id, "pi/2", "0", kF, kPoint, 0), row(id, "-pi/2", "pi", kF, kPoint, 0),
           row(id, "0", "0", kF, kTG, 2 * m), row(id, "pi/6", "0", kC, kNA, 3 * m),
           row(id, "-pi/6", "pi/3", kC, kNA, 3 * m), row(id, "0", "pi/2", kF, kTG, 3 * m),
           row(id, "0", "atan(sqrt(2))", kNone, kNA, 4 * m)}};
}

ExpectedTable g2_table(int id, std::string triad, int m, const std::string& a, const std::string& b) {
  return {id,
          std::move(triad),
          {row(id, "0", "-pi/2", kF, kPoint, 0), row(id, "0", "pi/2", kF, kPoint, 0),
           row(id, "pi/2", "-pi/2", kF, kTG, 4 * m), row(id, "pi/3", "-pi/2", kC, kNA, 3 * m),
           row(id, "atan(sqrt(5))", "pi/2-2*atan(sqrt(5))", kNone, kNA, 5 * m),
           free_row(id, "(" + a + ", " + b + ")", {0, 0}, {{1, 0}, {0, 1}}, {a, b}, 6 * m)}};
}

std::vector<ExpectedTable> build() {
  std::vector<ExpectedTable> tables;
  tables.push_back(a2_table(4, "su3-so3-dual", 2, 3));
  tables.push_back(a2_table(5, "su6-sp3-dual", 8, 12));

  ExpectedTable t6{6, "so10-u5-dual", {}};
  t6.rows.push_back(row(6, "0", "pi/2", kF, kPoint, 0));
  t6.rows.push_back(row(6, "0", "0", kF, kTG, 12));
  t6.rows.push_back(row(6, "pi/2", "-pi/2", kF, kTG, 8));
  ExpectedRow typo = row(6, "atan(sqrt(7/3))", "pi/2-atan(sqrt(7/3))", kNone, kNA, 14);
  typo.alternate = CellPoint({Angle::parse("atan(sqrt(7/3))"), Angle::parse("pi/2-2*atan(sqrt(7/3))")});
  typo.alternate_label = "(atan(sqrt(7/3)), pi/2-2*atan(sqrt(7/3)))";
  t6.rows.push_back(typo);
  t6.rows.push_back(row(6, "0", "atan(1/sqrt(13))", kNone, kNA, 13));
  t6.rows.push_back(row(6, "atan(sqrt(5)/3)", "-atan(sqrt(5)/3)", kNone, kNA, 17));
  t6.rows.push_back(free_row(6, "(a0, b0)", {0, 0}, {{1, 0}, {0, 1}}, {"a0", "b0"}, 18));
  tables.push_back(t6);

  tables.push_back(b2_table(7, "so5xso5-so5-dual"));
  tables.push_back(c2_table(8, "sp2-u2-dual", 1));
  tables.push_back(b2_table(9, "sp2xsp2-sp2-dual-sp2r"));
  tables.push_back(c2_table(10, "sp2xsp2-sp2-dual-sp11", 2));

  ExpectedTable t11{11, "e6-spin10u1-dual", {}};
  t11.rows.push_back(row(11, "0", "0", kF, kTG, 20));
  t11.rows.push_back(row(11, "0", "pi/2", kF, kPoint, 0));
  t11.rows.push_back(row(11, "pi/2", "-pi/2", kF, kTG, 17));
  t11.rows.push_back(free_row(11, "(0, a1)", {0, 0}, {{0, 1}}, {"a1"}, 21));
  t11.rows.push_back(free_row(11, "(a2, -a2)", {0, 0}, {{1, -1}}, {"a2"}, 29));
  t11.rows.push_back(free_row(11, "(a3, pi/2-2*a3)", {0, Rational(1, 2)}, {{1, -2}}, {"a3"}, 25));
  t11.rows.push_back(free_row(11, "(a4, b)", {0, 0}, {{1, 0}, {0, 1}}, {"a4", "b"}, 30));
  tables.push_back(t11);

  tables.push_back(a2_table(12, "e6-f4-dual", 16, 24));
  tables.push_back(g2_table(13, "g2-so4-dual", 1, "a4", "b2"));
  tables.push_back(g2_table(14, "g2xg2-g2-dual", 2, "a5", "b3"));
  return tables;
}

}  // namespace

const std::vector<ExpectedTable>& expected_tables() {
  static const std::vector<ExpectedTable> tables = build();
  return tables;
}

const ExpectedTable& expected_table(int id) {
  for (const auto& t : expected_tables()) {
    if (t.id == id) return t;
  }
  throw std::out_of_range("no table " + std::to_string(id) + " (tables 4-14 are available)");
}

}  // namespace hermann
