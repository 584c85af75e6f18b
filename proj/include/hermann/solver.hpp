#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hermann/faces.hpp"
#include "hermann/orbit.hpp"
#include "hermann/root_geometry.hpp"

namespace hermann {

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sum of mV log sin beta + mH log cos beta over the roots not pinned on the
/// face, at face coordinates y. Throws DomainError outside the open face.
double log_volume(const SymmetricTriad& t, const Face& f, const std::vector<double>& y);
Eigen::VectorXd log_volume_gradient(const SymmetricTriad& t, const Face& f, const std::vector<double>& y);
Eigen::MatrixXd log_volume_hessian(const SymmetricTriad& t, const Face& f, const std::vector<double>& y);

/// True when the roots that vary on the face span its directions, i.e. the
/// objective is strictly concave there.
bool active_roots_span(const SymmetricTriad& t, const Face& f);

struct SolveDiagnostics {
  int iterations = 0;
  double gradient_norm = 0.0;
  bool converged = false;
  bool degenerate = false;  // active roots do not span the face directions
  bool snapped = false;     // numeric result replaced by an exact point
  std::string message;
};

struct FaceSolution {
  std::optional<CellPoint> z;
  std::vector<double> y;  // face coordinates of the maximiser
  SolveDiagnostics diagnostics;
};

struct SolverOptions {
  double gradient_tolerance = 1e-12;
  int max_iterations = 200;
  double snap_tolerance = 1e-9;
};

/// Maximiser of the log-volume on the relative interior of the face, started
/// at the face's Chebyshev centre (or at `start` when given).
FaceSolution solve_face(const SymmetricTriad& t, const FaceEnumeration& fe, const Face& f,
                        const SolverOptions& opts = {}, const std::vector<double>* start = nullptr);

struct MinimalOrbit {
  std::size_t face_index = 0;
  CellPoint z;
  OrbitReport report;
  std::vector<std::size_t> duplicate_faces;  // other faces that produced the same point
};

struct FaceOutcome {
  std::size_t face_index = 0;
  std::string face;
  int dimension = 0;
  SolveDiagnostics diagnostics;
  bool solved = false;
};

struct MinimalOrbitSet {
  FaceEnumeration faces;
  std::vector<MinimalOrbit> solutions;
  std::vector<FaceOutcome> outcomes;
  std::vector<std::string> notes;
};

struct EnumerateOptions {
  SolverOptions solver;
  double tolerance = kDefaultTolerance;
  bool parallel = false;
};

MinimalOrbitSet enumerate_minimal_orbits(const SymmetricTriad& t, const EnumerateOptions& opts = {});

/// Maps Z into the closed cell by repeatedly reflecting in a violated wall.
/// Exactness is preserved. Throws std::runtime_error if the root data do not
/// determine the reflections or the walk does not terminate.
CellPoint reduce_to_cell(const SymmetricTriad& t, const CellPoint& z, double tol = kDefaultTolerance);

/// Uniform random points of the face's Chebyshev ball (face coordinates).
std::vector<std::vector<double>> random_face_starts(const Face& f, int count, unsigned seed);

}  // namespace hermann
