#pragma once

#include <vector>

namespace hermann {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> z;
  double value = 0.0;
};

/// Maximises c.z subject to A z <= b with z free, starting from the known
/// feasible point `start`. Dense tableau simplex with Bland's rule; meant for
/// the handful of variables that describe a face of the cell.
LpResult maximize(const std::vector<double>& c, const std::vector<std::vector<double>>& a,
                  const std::vector<double>& b, const std::vector<double>& start);

}  // namespace hermann
