#include "hermann/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace hermann {

namespace {

// One term m * log sin(beta) or m * log cos(beta) of the objective.
struct Term {
  std::vector<double> n;  // root coefficients
  double m;
  bool vertical;
};

std::vector<Term> active_terms(const SymmetricTriad& t, const Face& f) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < t.roots.size(); ++k) {
    const TriadRoot& r = t.roots[k];
    std::vector<double> n(r.root.begin(), r.root.end());
    if (r.vertical() && !f.pins_vertical(k)) terms.push_back({n, static_cast<double>(r.mV), true});
    if (r.horizontal() && !f.pins_horizontal(k)) terms.push_back({n, static_cast<double>(r.mH), false});
  }
  return terms;
}

Eigen::MatrixXd basis_matrix(const Face& f) {
  Eigen::MatrixXd b(static_cast<Eigen::Index>(f.base_point.size()), static_cast<Eigen::Index>(f.span_basis.size()));
  for (std::size_t k = 0; k < f.span_basis.size(); ++k) {
    for (std::size_t i = 0; i < f.base_point.size(); ++i) {
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = boost::rational_cast<double>(f.span_basis[k][i]);
    }
  }
  return b;
}

double root_value(const Term& term, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += term.n[i] * x[i];
  return s;
}

struct Evaluation {
  double value;
  Eigen::VectorXd grad;  // ambient
  Eigen::MatrixXd hess;  // ambient
};

Evaluation evaluate(const std::vector<Term>& terms, const std::vector<double>& x, bool derivatives) {
  const auto r = static_cast<Eigen::Index>(x.size());
  Evaluation e{0.0, Eigen::VectorXd::Zero(r), Eigen::MatrixXd::Zero(r, r)};
  for (const Term& term : terms) {
    double b = root_value(term, x);
    double s = term.vertical ? std::sin(b) : std::cos(b);
    if (!(s > 0.0)) throw DomainError("log-volume evaluated outside the open face");
    e.value += term.m * std::log(s);
    if (!derivatives) continue;
    Eigen::Map<const Eigen::VectorXd> n(term.n.data(), r);
    // d/db log sin = cot, d2 = -1/sin^2; d/db log cos = -tan, d2 = -1/cos^2
    double d1 = term.vertical ? std::cos(b) / s : -std::sin(b) / s;
    e.grad += term.m * d1 * n;
    e.hess -= term.m / (s * s) * n * n.transpose();
  }
  return e;
}

std::optional<Angle> snap_to_twelfths(double x, double tol) {
  double k = std::round(x * 12.0 / kPi);
  if (std::abs(x - k * kPi / 12.0) > tol) return std::nullopt;
  return Angle::pi_times(Rational(static_cast<std::int64_t>(k), 12));
}

}  // namespace

double log_volume(const SymmetricTriad& t, const Face& f, const std::vector<double>& y) {
  return evaluate(active_terms(t, f), f.ambient(y), false).value;
}

Eigen::VectorXd log_volume_gradient(const SymmetricTriad& t, const Face& f, const std::vector<double>& y) {
  return basis_matrix(f).transpose() * evaluate(active_terms(t, f), f.ambient(y), true).grad;
}

Eigen::MatrixXd log_volume_hessian(const SymmetricTriad& t, const Face& f, const std::vector<double>& y) {
  Eigen::MatrixXd b = basis_matrix(f);
  return b.transpose() * evaluate(active_terms(t, f), f.ambient(y), true).hess * b;
}

bool active_roots_span(const SymmetricTriad& t, const Face& f) {
  if (f.dimension == 0) return true;
  auto terms = active_terms(t, f);
  Eigen::MatrixXd b = basis_matrix(f);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(terms.size()), b.cols());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Eigen::Map<const Eigen::VectorXd> n(terms[i].n.data(), b.rows());
    m.row(static_cast<Eigen::Index>(i)) = n.transpose() * b;
  }
  if (terms.empty()) return false;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return lu.rank() == b.cols();
}

FaceSolution solve_face(const SymmetricTriad& t, const FaceEnumeration& fe, const Face& f, const SolverOptions& opts,
                        const std::vector<double>* start) {
  FaceSolution out;
  SolveDiagnostics& diag = out.diagnostics;
  if (f.dimension == 0) {
    out.z = f.base();
    diag.converged = true;
    diag.message = "vertex";
    return out;
  }
  if (!active_roots_span(t, f)) {
    diag.degenerate = true;
    diag.message = "active roots do not span the face directions; maximiser may be non-isolated";
    return out;
  }

  const auto terms = active_terms(t, f);
  const Eigen::MatrixXd b = basis_matrix(f);
  std::vector<double> y = start ? *start : f.interior_point;
  auto eval = [&](const std::vector<double>& yy, bool deriv) { return evaluate(terms, f.ambient(yy), deriv); };
  auto inside = [&](const std::vector<double>& yy) { return strictly_inside(fe, f, f.ambient(yy)); };

  try {
    Evaluation e = eval(y, true);
    for (diag.iterations = 0; diag.iterations < opts.max_iterations; ++diag.iterations) {
      Eigen::VectorXd g = b.transpose() * e.grad;
      diag.gradient_norm = g.norm();
      if (diag.gradient_norm < opts.gradient_tolerance) {
        diag.converged = true;
        break;
      }
      Eigen::MatrixXd h = b.transpose() * e.hess * b;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
      if (ldlt.info() != Eigen::Success || !ldlt.isNegative()) {
        diag.degenerate = true;
        diag.message = "Hessian not negative definite";
        return out;
      }
      Eigen::VectorXd step = -ldlt.solve(g);
      double slope = g.dot(step);
      double alpha = 1.0;
      std::vector<double> trial(y.size());
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        for (std::size_t i = 0; i < y.size(); ++i) trial[i] = y[i] + alpha * step(static_cast<Eigen::Index>(i));
        if (inside(trial)) {
          Evaluation et = eval(trial, true);
          // Near the optimum the objective change drowns in rounding; accept
          // any feasible full step there.
          if (et.value >= e.value + 1e-4 * alpha * slope || diag.gradient_norm < 1e-7) {
            y = trial;
            e = std::move(et);
            accepted = true;
            break;
          }
        }
        alpha *= 0.5;
      }
      if (!accepted) {
        diag.message = "line search failed";
        break;
      }
    }
  } catch (const DomainError& ex) {
    diag.message = ex.what();
    return out;
  }
  if (!diag.converged) {
    if (diag.message.empty()) diag.message = "iteration limit reached";
    // Accept a result that is converged to rounding level.
    if (diag.gradient_norm > 1e-9) return out;
    diag.converged = true;
  }

  out.y = y;
  std::vector<double> x = f.ambient(y);
  // Coordinates that agree with a multiple of pi/12 to rounding level are
  // reported exactly even when the point as a whole stays numeric.
  CellPoint numeric;
  for (double v : x) numeric.coords.push_back(snap_to_twelfths(v, 1e-12).value_or(Angle::radians(v)));
  out.z = numeric;

  CellPoint exact;
  for (double v : x) {
    auto a = snap_to_twelfths(v, opts.snap_tolerance);
    if (!a) return out;
    exact.coords.push_back(*a);
  }
  try {
    if (is_minimal(t, exact)) {
      out.z = exact;
      diag.snapped = true;
    }
  } catch (const PoleError&) {
  }
  return out;
}

MinimalOrbitSet enumerate_minimal_orbits(const SymmetricTriad& t, const EnumerateOptions& opts) {
  MinimalOrbitSet set;
  set.faces = enumerate_faces(t);
  if (!set.faces.complete) set.notes.push_back(set.faces.note);

  const std::size_t nf = set.faces.faces.size();
  std::vector<FaceSolution> sols(nf);
  auto work = [&](std::size_t i) { sols[i] = solve_face(t, set.faces, set.faces.faces[i], opts.solver); };
  if (opts.parallel && nf > 1) {
    std::atomic<std::size_t> next{0};
    unsigned n_threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(nf)));
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n_threads; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < nf; i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < nf; ++i) work(i);
  }

  // Faces are sorted by dimension, so the first record of a point is the
  // lowest-dimensional one.
  for (std::size_t i = 0; i < nf; ++i) {
    const Face& f = set.faces.faces[i];
    FaceOutcome fo{i, f.describe(t, set.faces.hyperplanes), f.dimension, sols[i].diagnostics, sols[i].z.has_value()};
    set.outcomes.push_back(fo);
    if (!sols[i].z) continue;
    const CellPoint& z = *sols[i].z;
    std::vector<double> zr = z.to_radians();
    auto dup = std::find_if(set.solutions.begin(), set.solutions.end(), [&](const MinimalOrbit& s) {
      std::vector<double> sr = s.z.to_radians();
      for (std::size_t k = 0; k < sr.size(); ++k) {
        if (std::abs(sr[k] - zr[k]) > opts.tolerance) return false;
      }
      return true;
    });
    if (dup != set.solutions.end()) {
      dup->duplicate_faces.push_back(i);
      continue;
    }
    set.solutions.push_back({i, z, classify(t, z, opts.tolerance), {}});
    // Critical on the face but not for the full balance system: the
    // multiplicities are not symmetric across the face's walls.
    if (!set.solutions.back().report.minimal) {
      set.notes.push_back("face " + std::to_string(i) + " (" + fo.face + "): maximiser " + z.to_string() +
                          " has nonzero mean curvature normal to the face");
    }
  }
  for (const auto& fo : set.outcomes) {
    if (!fo.solved) set.notes.push_back("face " + std::to_string(fo.face_index) + " (" + fo.face + "): " + fo.diagnostics.message);
  }
  return set;
}

CellPoint reduce_to_cell(const SymmetricTriad& t, const CellPoint& z, double tol) {
  auto geom = RootGeometry::from_triad(t);
  if (!geom) throw std::runtime_error("root data do not determine the reflection group");
  CellPoint cur = z;
  for (int step = 0; step < 1000; ++step) {
    bool moved = false;
    for (const auto& r : t.roots) {
      double v = cur.evaluate(r.root).to_radians();
      std::optional<Angle> level;
      if (r.vertical() && v < -tol) level = Angle::pi_times(0);
      else if (r.vertical() && v > kPi + tol) level = Angle::pi_times(1);
      else if (r.horizontal() && v < -kPi / 2 - tol) level = Angle::pi_times(-1, 2);
      else if (r.horizontal() && v > kPi / 2 + tol) level = Angle::pi_times(1, 2);
      if (level) {
        cur = geom->reflect(cur, r.root, *level);
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
  throw std::runtime_error("reduction to the cell did not terminate");
}

std::vector<std::vector<double>> random_face_starts(const Face& f, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const std::size_t d = f.span_basis.size();
  std::vector<std::vector<double>> out;
  for (int k = 0; k < count; ++k) {
    std::vector<double> dir(d);
    double norm = 0.0;
    for (double& v : dir) {
      v = normal(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    double radius = 0.95 * f.inradius * std::pow(uniform(rng), 1.0 / static_cast<double>(std::max<std::size_t>(d, 1)));
    std::vector<double> y = f.interior_point;
    for (std::size_t i = 0; i < d; ++i) y[i] += norm > 0 ? radius * dir[i] / norm : 0.0;
    out.push_back(y);
  }
  return out;
}

}  // namespace hermann
