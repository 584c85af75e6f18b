#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermann/exact_value.hpp"
#include "hermann/triad.hpp"

namespace hermann {

enum class RootKind { vertical, horizontal };

/// Indices (into SymmetricTriad::roots) of the roots that move from the
/// tangent to the normal space at Z: vertical roots with beta(Z) = 0 mod pi and
/// horizontal roots with beta(Z) = pi/2 mod pi.
struct SingularSets {
  std::vector<std::size_t> vertical;
  std::vector<std::size_t> horizontal;
  bool snapped = false;  // a numeric value was treated as lying on a congruence class
};

SingularSets singular_sets(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);

int orbit_dimension(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);
int normal_dimension(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);

/// Eigenvalue functional v -> coeff * root(v) of the shape operator A_v on one
/// eigenspace.
struct SpectrumEntry {
  RootVector root;
  ExactValue coeff;
  int multiplicity = 0;
  RootKind kind = RootKind::vertical;
};

struct ShapeSpectrum {
  std::vector<SpectrumEntry> entries;  // nonzero coefficients only
  int kernel_dim = 0;

  /// Eigenvalues of A_v for v given by its simple-root values, with multiplicity.
  std::vector<double> eigenvalues(const std::vector<double>& v) const;
};

ShapeSpectrum shape_spectrum(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);

class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F_i = sum_V n_i mV cot beta(Z) - sum_H n_i mH tan beta(Z) over nonsingular
/// roots. This is the gradient of the orbit log-volume; the mean curvature
/// vanishes iff F = 0. Throws PoleError if a nonsingular root evaluates to a
/// non-finite cot/tan.
std::vector<ExactValue> mean_curvature_components(const SymmetricTriad& t, const CellPoint& z,
                                                  double tol = kDefaultTolerance);

bool is_minimal(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);
bool is_austere(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);
bool is_austere(const ShapeSpectrum& s, double tol = kDefaultTolerance);
bool is_totally_geodesic(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);

struct ConditionCheck {
  bool holds = false;
  bool exact = true;       // false when some coordinate was numeric
  bool classes_ok = false; // every root value lies in the admissible classes
  std::string note;
};

/// Congruence classes {0, pi/6, pi/3, pi/2, 2pi/3, 5pi/6} plus the weighted
/// (3 : 1) balance for each simple root index.
ConditionCheck check_condition_I(const SymmetricTriad& t, const CellPoint& z);
/// Congruence classes {0, pi/4, pi/2, 3pi/4} plus the unit-weight balance.
ConditionCheck check_condition_II(const SymmetricTriad& t, const CellPoint& z);

enum class Theorem { B, C, D, E, F };

struct TheoremSet {
  unsigned bits = 0;
  void insert(Theorem th) { bits |= 1u << static_cast<unsigned>(th); }
  void erase(Theorem th) { bits &= ~(1u << static_cast<unsigned>(th)); }
  bool contains(Theorem th) const { return bits & (1u << static_cast<unsigned>(th)); }
  bool empty() const { return bits == 0; }
  std::vector<Theorem> list() const;
  std::string to_string() const;  // e.g. "{B}" or "{}"
  bool operator==(const TheoremSet&) const = default;
};

char theorem_letter(Theorem th);

struct OrbitReport {
  CellPoint z;
  int dim_orbit = 0;
  int dim_normal = 0;
  int kernel_dim = 0;
  bool minimal = false;
  bool austere = false;
  bool totally_geodesic = false;
  bool condition_I = false;
  bool condition_II = false;
  TheoremSet theorems;
  std::optional<Rational> metric_constant;
  ShapeSpectrum spectrum;
  std::vector<ExactValue> mean_curvature;
  bool exact = true;
  bool snapped = false;
  std::vector<std::string> notes;

  /// "as in Theorem F", "as in Theorem C", ... or "not as in Theorems C-F".
  std::string theorem_label() const;
  /// "one-point set", "totally geodesic", "austere" or "not austere".
  std::string shape_label() const;
};

OrbitReport classify(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);

}  // namespace hermann
