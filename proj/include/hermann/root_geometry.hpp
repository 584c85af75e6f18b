#pragma once

#include <optional>
#include <vector>

#include "hermann/triad.hpp"

namespace hermann {

/// Inner-product data of the simple roots, recovered from the root strings of
/// the positive root set.
class RootGeometry {
 public:
  /// Returns nullopt when the root set does not determine the inner products
  /// (a simple root missing from the list, or a disconnected diagram).
  static std::optional<RootGeometry> from_triad(const SymmetricTriad& t);

  int rank() const { return static_cast<int>(cartan_.size()); }

  /// Cartan integers <beta_i, beta_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Gram matrix of the simple roots, normalised so that (beta_1, beta_1) = 1.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  Rational inner(const RootVector& a, const RootVector& b) const;

  /// Values <beta_i, root^vee> for every simple root beta_i.
  std::vector<Rational> coroot_pairings(const RootVector& root) const;

  /// Reflection of Z in the affine hyperplane {root(Z) = level}; exactness is
  /// preserved.
  CellPoint reflect(const CellPoint& z, const RootVector& root, const Angle& level) const;

  /// Euclidean coordinates of Z (for drawing), using a Cholesky factor of the
  /// Gram matrix.
  std::vector<double> embed(const std::vector<double>& simple_values) const;

 private:
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> gram_;
};

}  // namespace hermann
