#include "hermann/linear_program.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hermann {

namespace {
constexpr double kEps = 1e-12;
}

LpResult maximize(const std::vector<double>& c, const std::vector<std::vector<double>>& a,
                  const std::vector<double>& b, const std::vector<double>& start) {
  const std::size_t n = c.size();
  const std::size_t m = a.size();
  if (b.size() != m || start.size() != n) throw std::invalid_argument("maximize: dimension mismatch");

  // Shift z = start + (u - w) with u, w >= 0, so the slack basis is feasible.
  std::vector<double> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    double s = b[i];
    for (std::size_t j = 0; j < n; ++j) s -= a[i][j] * start[j];
    if (s < -1e-9) return {};
    rhs[i] = std::max(s, 0.0);
  }

  // Tableau columns: u (n), w (n), slacks (m), rhs.
  const std::size_t cols = 2 * n + m;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols + 1, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = a[i][j];
      t[i][n + j] = -a[i][j];
    }
    t[i][2 * n + i] = 1.0;
    t[i][cols] = rhs[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    t[m][j] = -c[j];
    t[m][n + j] = c[j];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = 2 * n + i;

  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (t[m][j] < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > kEps) {
        double ratio = t[i][cols] / t[i][enter];
        if (ratio < best - kEps || (std::abs(ratio - best) <= kEps && leave < m && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) return {LpStatus::unbounded, {}, 0.0};
    double p = t[leave][enter];
    for (double& v : t[leave]) v /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || std::abs(t[i][enter]) < 1e-300) continue;
      double f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  std::vector<double> x(cols, 0.0);
  for (std::size_t i = 0; i < m; ++i) x[basis[i]] = t[i][cols];
  LpResult out;
  out.status = LpStatus::optimal;
  out.z.resize(n);
  out.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    out.z[j] = start[j] + x[j] - x[n + j];
    out.value += c[j] * out.z[j];
  }
  return out;
}

}  // namespace hermann
