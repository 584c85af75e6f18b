#pragma once

#include <string>
#include <vector>

#include "hermann/triad.hpp"

namespace hermann {

/// Which closed-cell inequality of a root is active.
enum class Side { V_zero, V_pi, H_neg, H_pos };

const char* side_name(Side s);

struct PinnedConstraint {
  std::size_t root = 0;  // index into SymmetricTriad::roots
  Side side = Side::V_zero;
  bool operator==(const PinnedConstraint&) const = default;
};

/// Geometric boundary hyperplane {normal . x = level * pi}, normal primitive
/// with first nonzero entry positive. Several (root, side) pairs may give the
/// same hyperplane (e.g. beta = 0 and 2 beta = 0).
struct Hyperplane {
  RootVector normal;
  Rational level;
  std::vector<PinnedConstraint> sources;

  /// Name in the style "(2b1+b2)^-1(pi/2)" using the first source root.
  std::string label(const SymmetricTriad& t) const;
};

/// A relatively open face of the closed fundamental cell.
struct Face {
  std::vector<std::size_t> tight;          // indices into FaceEnumeration::hyperplanes
  std::vector<PinnedConstraint> pinned;    // every (root, side) active on the face
  std::vector<Rational> base_point;        // simple-root values in units of pi
  std::vector<std::vector<Rational>> span_basis;  // direction vectors (columns)
  std::vector<double> interior_point;      // face coordinates (radians) of a Chebyshev centre
  double inradius = 0.0;                   // radius of that centre's ball, radians
  int dimension = 0;

  /// Simple-root values (radians) of the face point with coordinates y.
  std::vector<double> ambient(const std::vector<double>& y) const;
  CellPoint base() const;  // exact
  bool pins_vertical(std::size_t root) const;
  bool pins_horizontal(std::size_t root) const;
  std::string describe(const SymmetricTriad& t, const std::vector<Hyperplane>& hyperplanes) const;
};

/// Inequality c . x <= d (x in radians) of the closed cell.
struct CellInequality {
  RootVector normal;
  double bound = 0.0;
  std::size_t hyperplane = 0;
};

struct FaceEnumeration {
  std::vector<Hyperplane> hyperplanes;
  std::vector<CellInequality> inequalities;
  std::vector<Face> faces;  // sorted by dimension, then by tight set
  bool complete = true;     // exhaustive search was guaranteed (rank <= 3, no cap hit)
  std::string note;
};

/// Enumerates every nonempty face of the closed cell by choosing independent
/// subsets of boundary hyperplanes and testing relative-interior feasibility
/// with a Chebyshev-centre linear program.
FaceEnumeration enumerate_faces(const SymmetricTriad& t);

/// True when the simple-root values x (radians) satisfy every cell inequality
/// of the face strictly, apart from the face's own equalities.
bool strictly_inside(const FaceEnumeration& fe, const Face& f, const std::vector<double>& x, double margin = 0.0);

}  // namespace hermann
