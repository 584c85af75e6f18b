#pragma once
// Property checks shared by the unit tests and the acceptance binary.

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "hermann/report.hpp"

namespace hermann::checks {

struct Tally {
  long checked = 0;
  long failures = 0;
  std::string first_failure;
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return checked > 0 && failures == 0; }
};

inline const Face& open_face(const FaceEnumeration& fe) { return fe.faces.back(); }

/// Uniform points of the open cell, by rejection from the Chebyshev ball.
inline std::vector<std::vector<double>> interior_samples(const Face& f, int count, unsigned seed) {
  return random_face_starts(f, count, seed);
}

/// (a) analytic gradient against central differences, relative 1e-6.
inline void gradient_vs_differences(const SymmetricTriad& t, int count, Tally& tally, unsigned seed = 11) {
  FaceEnumeration fe = enumerate_faces(t);
  const Face& f = open_face(fe);
  const double h = 1e-6;
  for (const auto& y : interior_samples(f, count, seed)) {
    Eigen::VectorXd g = log_volume_gradient(t, f, y);
    for (std::size_t i = 0; i < y.size(); ++i) {
      auto yp = y, ym = y;
      yp[i] += h;
      ym[i] -= h;
      const double fd = (log_volume(t, f, yp) - log_volume(t, f, ym)) / (2 * h);
      const double gi = g(static_cast<Eigen::Index>(i));
      ++tally.checked;
      if (std::fabs(gi - fd) > 1e-6 * std::max(1.0, std::fabs(gi))) {
        std::ostringstream os;
        os << t.id << ": d/dy" << i << " analytic " << gi << " vs " << fd;
        tally.fail(os.str());
      }
    }
  }
}

/// (b) Hessian negative-definite at the same points.
inline void hessian_negative(const SymmetricTriad& t, int count, Tally& tally, unsigned seed = 11) {
  FaceEnumeration fe = enumerate_faces(t);
  const Face& f = open_face(fe);
  for (const auto& y : interior_samples(f, count, seed)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(log_volume_hessian(t, f, y));
    ++tally.checked;
    if (es.eigenvalues().maxCoeff() >= 0) tally.fail(t.id + ": Hessian has eigenvalue " + std::to_string(es.eigenvalues().maxCoeff()));
  }
}

/// (c) totally geodesic => austere => minimal, and (d) dim_orbit + dim_normal = ambient.
inline void report_implications(const SymmetricTriad& t, const OrbitReport& r, Tally& impl, Tally& dims) {
  ++impl.checked;
  if ((r.totally_geodesic && !r.austere) || (r.austere && !r.minimal)) impl.fail(t.id + " at " + r.z.to_string());
  if (t.ambient_dim) {
    ++dims.checked;
    if (r.dim_orbit + r.dim_normal != *t.ambient_dim) {
      dims.fail(t.id + " at " + r.z.to_string() + ": " + std::to_string(r.dim_orbit) + " + " +
                std::to_string(r.dim_normal) + " != " + std::to_string(*t.ambient_dim));
    }
  }
}

/// Runs (c) and (d) over every solver point and every printed point of Tables 4-14.
inline void table_points(Tally& impl, Tally& dims) {
  for (const auto& table : expected_tables()) {
    const SymmetricTriad& t = triad_by_name(table.triad);
    MinimalOrbitSet s = enumerate_minimal_orbits(t);
    for (const auto& m : s.solutions) report_implications(t, m.report, impl, dims);
    for (const auto& row : table.rows) {
      if (!row.point) continue;
      report_implications(t, classify(t, reduce_to_cell(t, *row.point)), impl, dims);
    }
  }
}

/// Rational multiples of pi with denominator <= max_den in [lo, hi].
inline std::vector<Rational> rational_grid(Rational lo, Rational hi, int max_den) {
  std::vector<Rational> out;
  for (int d = 1; d <= max_den; ++d) {
    for (int p = -2 * d; p <= 2 * d; ++p) {
      Rational x(p, d);
      if (x.denominator() == d && lo <= x && x <= hi) out.push_back(x);
    }
  }
  return out;
}

inline bool in_closed_cell(const SymmetricTriad& t, const CellPoint& z) {
  for (const auto& r : t.roots) {
    Rational v = z.evaluate(r.root).pi_multiple();
    if (r.vertical() && (v < Rational(0) || v > Rational(1))) return false;
    if (r.horizontal() && (v < Rational(-1, 2) || v > Rational(1, 2))) return false;
  }
  return true;
}

/// (e) condition (I) or (II) => minimal, exactly, over the rational grid of the closed cell.
inline void conditions_imply_minimal(const SymmetricTriad& t, int max_den, Tally& tally, long* with_condition = nullptr) {
  auto grid = rational_grid(Rational(-1, 2), Rational(1), max_den);
  for (Rational a : grid) {
    for (Rational b : grid) {
      CellPoint z({Angle::pi_times(a), Angle::pi_times(b)});
      if (!in_closed_cell(t, z)) continue;
      ++tally.checked;
      const bool c1 = check_condition_I(t, z).holds, c2 = check_condition_II(t, z).holds;
      if (!c1 && !c2) continue;
      if (with_condition) ++*with_condition;
      if (!is_minimal(t, z)) tally.fail(t.id + " at " + z.to_string());
    }
  }
}

/// Solver uniqueness: random starts on every face converge to the same point.
inline void solver_uniqueness(const SymmetricTriad& t, int starts, double tol, Tally& tally, unsigned seed = 5) {
  FaceEnumeration fe = enumerate_faces(t);
  for (const auto& f : fe.faces) {
    if (f.dimension == 0) continue;
    FaceSolution ref = solve_face(t, fe, f);
    if (!ref.z) {
      tally.fail(t.id + ": no solution on " + f.describe(t, fe.hyperplanes));
      continue;
    }
    const auto x0 = ref.z->to_radians();
    for (const auto& y : random_face_starts(f, starts, seed)) {
      FaceSolution s = solve_face(t, fe, f, {}, &y);
      ++tally.checked;
      if (!s.z) {
        tally.fail(t.id + ": start failed on " + f.describe(t, fe.hyperplanes));
        continue;
      }
      const auto x = s.z->to_radians();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::fabs(x[i] - x0[i]) > tol) {
          tally.fail(t.id + ": " + s.z->to_string() + " vs " + ref.z->to_string());
          break;
        }
      }
    }
  }
}

}  // namespace hermann::checks
