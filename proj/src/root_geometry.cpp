#include "hermann/root_geometry.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

namespace hermann {

std::optional<RootGeometry> RootGeometry::from_triad(const SymmetricTriad& t) {
  const int r = t.rank;
  std::set<RootVector> roots;
  for (const auto& tr : t.roots) roots.insert(tr.root);

  auto simple = [r](int i) {
    RootVector v(static_cast<std::size_t>(r), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  for (int i = 0; i < r; ++i) {
    if (!roots.count(simple(i))) return std::nullopt;
  }

  // For simple roots the beta_j-string through beta_i starts at beta_i, so
  // <beta_i, beta_j^vee> = -q with q the string length above beta_i.
  RootGeometry g;
  g.cartan_.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i == j) {
        g.cartan_[i][j] = 2;
        continue;
      }
      int q = 0;
      for (;;) {
        RootVector v = simple(i);
        v[static_cast<std::size_t>(j)] = q + 1;
        if (!roots.count(v)) break;
        ++q;
      }
      g.cartan_[i][j] = -q;
    }
  }

  // Symmetrise: A_ij = 2 G_ij / G_jj, propagated from G_00 = 1 along the diagram.
  std::vector<std::optional<Rational>> diag(static_cast<std::size_t>(r));
  diag[0] = Rational(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < r; ++i) {
      if (!diag[i]) continue;
      for (int j = 0; j < r; ++j) {
        if (diag[j] || g.cartan_[i][j] == 0) continue;
        if (g.cartan_[j][i] == 0) return std::nullopt;
        diag[j] = *diag[i] * Rational(g.cartan_[j][i], g.cartan_[i][j]);
        changed = true;
      }
    }
  }
  g.gram_.assign(static_cast<std::size_t>(r), std::vector<Rational>(static_cast<std::size_t>(r), Rational(0)));
  for (int i = 0; i < r; ++i) {
    if (!diag[i]) return std::nullopt;
    for (int j = 0; j < r; ++j) {
      if (!diag[j]) return std::nullopt;
      g.gram_[i][j] = i == j ? *diag[i] : Rational(g.cartan_[i][j]) * *diag[j] / 2;
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (g.gram_[i][j] != g.gram_[j][i]) return std::nullopt;  // not symmetrisable
    }
  }
  return g;
}

Rational RootGeometry::inner(const RootVector& a, const RootVector& b) const {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) s += gram_[i][j] * a[i] * b[j];
    }
  }
  return s;
}

std::vector<Rational> RootGeometry::coroot_pairings(const RootVector& root) const {
  Rational norm = inner(root, root);
  std::vector<Rational> out;
  for (int i = 0; i < rank(); ++i) {
    RootVector e(static_cast<std::size_t>(rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.push_back(inner(e, root) * 2 / norm);
  }
  return out;
}

CellPoint RootGeometry::reflect(const CellPoint& z, const RootVector& root, const Angle& level) const {
  // beta_i(s Z) = beta_i(Z) - (root(Z) - level) <beta_i, root^vee>
  Angle offset = z.evaluate(root) - level;
  std::vector<Rational> pair = coroot_pairings(root);
  CellPoint out = z;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    if (pair[i] == Rational(0)) continue;
    if (pair[i].denominator() != 1) throw std::logic_error("non-integral coroot pairing");
    out.coords[i] = out.coords[i] - offset * pair[i].numerator();
  }
  return out;
}

std::vector<double> RootGeometry::embed(const std::vector<double>& simple_values) const {
  const int r = rank();
  Eigen::MatrixXd gram(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) gram(i, j) = boost::rational_cast<double>(gram_[i][j]);
  }
  // Rows of E are the simple roots as Euclidean vectors (E E^T = G); Z solves E Z = x.
  Eigen::MatrixXd e = gram.llt().matrixL();
  Eigen::VectorXd x(r);
  for (int i = 0; i < r; ++i) x(i) = simple_values[static_cast<std::size_t>(i)];
  Eigen::VectorXd z = e.triangularView<Eigen::Lower>().solve(x);
  return {z.data(), z.data() + z.size()};
}

}  // namespace hermann
