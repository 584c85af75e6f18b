#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermann/angle.hpp"

namespace hermann {

/// Coefficients of a positive root in the basis of simple roots.
using RootVector = std::vector<int>;

/// A positive restricted root together with its vertical (q-part) and
/// horizontal (h-part) multiplicities.
struct TriadRoot {
  RootVector root;
  int mV = 0;
  int mH = 0;

  bool vertical() const { return mV > 0; }
  bool horizontal() const { return mH > 0; }
  bool operator==(const TriadRoot&) const = default;
};

/// Combinatorial data of a commutative Hermann action: the positive roots with
/// split multiplicities plus the dimensions needed for orbit bookkeeping.
struct SymmetricTriad {
  std::string id;    // short slug used on the command line, may be empty
  std::string name;  // display name
  int rank = 0;
  std::vector<TriadRoot> roots;
  int centralizer_dim = 0;
  std::optional<int> ambient_dim;
  bool cohomogeneity_equals_rank = true;

  const TriadRoot* find_root(const RootVector& v) const;
  bool has_overlapping_roots() const;  // some root is both vertical and horizontal
  int total_multiplicity() const;      // sum over roots of mV + mH

  bool operator==(const SymmetricTriad&) const = default;
};

/// Point Z of the abelian subspace given by its simple-root values beta_i(Z).
struct CellPoint {
  std::vector<Angle> coords;

  CellPoint() = default;
  explicit CellPoint(std::vector<Angle> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  bool is_exact() const;
  /// beta(Z) = sum_i n_i * beta_i(Z)
  Angle evaluate(const RootVector& root) const;
  std::vector<double> to_radians() const;
  std::string to_string() const;

  bool operator==(const CellPoint&) const = default;
};

/// Parses "pi/3,-pi/6" style coordinate lists.
CellPoint parse_cell_point(std::string_view text);

/// Empty when every structural invariant holds; otherwise one message per
/// violation.
std::vector<std::string> validate(const SymmetricTriad& t);

/// The sixteen built-in rank-two actions (five with equal multiplicities and
/// eleven with disjoint vertical/horizontal roots).
const std::vector<SymmetricTriad>& catalog();

/// Looks up a catalog entry by slug or display name.
const SymmetricTriad* find_triad(std::string_view key);
/// Same as find_triad but throws std::out_of_range.
const SymmetricTriad& triad_by_name(std::string_view key);

/// Type a_{3n+2} isotropy triad with every multiplicity equal to m (m = 1 or 4).
SymmetricTriad example_triad_A(int n, int m);
/// Type c_{3n+2} isotropy triad with unit multiplicities.
SymmetricTriad example_triad_C(int n);
/// Rank-one triad {beta (2), 2 beta (1)} of the complex projective plane.
SymmetricTriad example_triad_CP2();

struct ExamplePoint {
  CellPoint z;
  bool index_collision = false;  // two assignments hit the same coordinate
};

/// The distinguished point of the worked examples 1..4 (n ignored for 3).
/// Throws std::invalid_argument for other ids or negative n.
ExamplePoint example_Z(int which, int n);

/// Triad used by the worked example `which` (1: A with m=1, 2: A with m=4,
/// 3: CP2, 4: C).
SymmetricTriad example_triad(int which, int n);

/// Simple-root indices of beta_i + ... + beta_j (1-based, inclusive) in rank r.
RootVector root_sum(int rank, int i, int j);

std::string root_to_string(const RootVector& v);

}  // namespace hermann
