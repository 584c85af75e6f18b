#include "hermann/faces.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "hermann/linear_program.hpp"

namespace hermann {

namespace {

using Key = std::pair<RootVector, Rational>;

// Primitive normal with first nonzero entry positive.
Key normalise(RootVector n, Rational level) {
  int g = 0;
  for (int v : n) g = std::gcd(g, std::abs(v));
  int sign = 1;
  for (int v : n) {
    if (v != 0) {
      sign = v > 0 ? 1 : -1;
      break;
    }
  }
  for (int& v : n) v = v / g * sign;
  return {n, level / (g * sign)};
}

Rational side_level(Side s) {
  switch (s) {
    case Side::V_zero: return Rational(0);
    case Side::V_pi: return Rational(1);
    case Side::H_neg: return Rational(-1, 2);
    case Side::H_pos: return Rational(1, 2);
  }
  return Rational(0);
}

std::string level_string(Rational r) { return Angle::pi_times(r).to_string(); }

struct Span {
  std::vector<Rational> point;
  std::vector<std::vector<Rational>> basis;
};

// Exact solution set of the rows n_k . x = c_k; nullopt if inconsistent or if
// the rows are dependent (rank < rows).
std::optional<Span> solve_span(const std::vector<RootVector>& rows, const std::vector<Rational>& rhs, int r) {
  const std::size_t k = rows.size();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(static_cast<std::size_t>(r) + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < r; ++j) m[i][static_cast<std::size_t>(j)] = rows[i][static_cast<std::size_t>(j)];
    m[i][static_cast<std::size_t>(r)] = rhs[i];
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < r && row < k; ++col) {
    std::size_t p = row;
    while (p < k && m[p][static_cast<std::size_t>(col)] == Rational(0)) ++p;
    if (p == k) continue;
    std::swap(m[p], m[row]);
    Rational piv = m[row][static_cast<std::size_t>(col)];
    for (auto& v : m[row]) v /= piv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || m[i][static_cast<std::size_t>(col)] == Rational(0)) continue;
      Rational f = m[i][static_cast<std::size_t>(col)];
      for (std::size_t j = 0; j <= static_cast<std::size_t>(r); ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row < k) return std::nullopt;  // dependent rows
  Span s;
  s.point.assign(static_cast<std::size_t>(r), Rational(0));
  for (std::size_t i = 0; i < k; ++i) s.point[static_cast<std::size_t>(pivot_col[i])] = m[i][static_cast<std::size_t>(r)];
  for (int free = 0; free < r; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<Rational> v(static_cast<std::size_t>(r), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < k; ++i) v[static_cast<std::size_t>(pivot_col[i])] = -m[i][static_cast<std::size_t>(free)];
    s.basis.push_back(v);
  }
  return s;
}

Rational dot(const RootVector& n, const std::vector<Rational>& x) {
  Rational s(0);
  for (std::size_t i = 0; i < n.size(); ++i) s += x[i] * n[i];
  return s;
}

// Visits every subset of {0..n-1} of size k in lexicographic order.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return true;
  for (;;) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

constexpr long kSubsetCap = 2'000'000;

}  // namespace

const char* side_name(Side s) {
  switch (s) {
    case Side::V_zero: return "V_zero";
    case Side::V_pi: return "V_pi";
    case Side::H_neg: return "H_neg";
    case Side::H_pos: return "H_pos";
  }
  return "?";
}

std::string Hyperplane::label(const SymmetricTriad& t) const {
  const PinnedConstraint& s = sources.front();
  std::string root = root_to_string(t.roots[s.root].root);
  if (root.find('+') != std::string::npos) root = "(" + root + ")";
  return root + "^-1(" + level_string(side_level(s.side)) + ")";
}

std::vector<double> Face::ambient(const std::vector<double>& y) const {
  std::vector<double> x(base_point.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double v = boost::rational_cast<double>(base_point[i]) * kPi;
    for (std::size_t k = 0; k < span_basis.size(); ++k) v += boost::rational_cast<double>(span_basis[k][i]) * y[k];
    x[i] = v;
  }
  return x;
}

CellPoint Face::base() const {
  CellPoint z;
  for (const auto& v : base_point) z.coords.push_back(Angle::pi_times(v));
  return z;
}

bool Face::pins_vertical(std::size_t root) const {
  return std::any_of(pinned.begin(), pinned.end(), [root](const PinnedConstraint& p) {
    return p.root == root && (p.side == Side::V_zero || p.side == Side::V_pi);
  });
}

bool Face::pins_horizontal(std::size_t root) const {
  return std::any_of(pinned.begin(), pinned.end(), [root](const PinnedConstraint& p) {
    return p.root == root && (p.side == Side::H_neg || p.side == Side::H_pos);
  });
}

std::string Face::describe(const SymmetricTriad& t, const std::vector<Hyperplane>& hyperplanes) const {
  if (tight.empty()) return "interior";
  std::string s;
  for (std::size_t h : tight) {
    if (!s.empty()) s += ", ";
    s += root_to_string(t.roots[hyperplanes[h].sources.front().root].root) + "=" +
         level_string(side_level(hyperplanes[h].sources.front().side));
  }
  return s;
}

bool strictly_inside(const FaceEnumeration& fe, const Face& f, const std::vector<double>& x, double margin) {
  for (const auto& ineq : fe.inequalities) {
    if (std::find(f.tight.begin(), f.tight.end(), ineq.hyperplane) != f.tight.end()) continue;
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += ineq.normal[i] * x[i];
    if (s >= ineq.bound - margin) return false;
  }
  return true;
}

FaceEnumeration enumerate_faces(const SymmetricTriad& t) {
  FaceEnumeration fe;
  const int r = t.rank;

  std::map<Key, std::size_t> index;
  auto add = [&](std::size_t root, Side side) {
    Key key = normalise(t.roots[root].root, side_level(side));
    auto [it, fresh] = index.emplace(key, fe.hyperplanes.size());
    if (fresh) fe.hyperplanes.push_back({key.first, key.second, {}});
    fe.hyperplanes[it->second].sources.push_back({root, side});
    return it->second;
  };
  for (std::size_t k = 0; k < t.roots.size(); ++k) {
    const TriadRoot& root = t.roots[k];
    RootVector neg = root.root;
    for (int& v : neg) v = -v;
    if (root.vertical()) {
      std::size_t h0 = add(k, Side::V_zero);
      std::size_t h1 = add(k, Side::V_pi);
      fe.inequalities.push_back({neg, 0.0, h0});
      fe.inequalities.push_back({root.root, kPi, h1});
    }
    if (root.horizontal()) {
      std::size_t h0 = add(k, Side::H_neg);
      std::size_t h1 = add(k, Side::H_pos);
      fe.inequalities.push_back({neg, kPi / 2, h0});
      fe.inequalities.push_back({root.root, kPi / 2, h1});
    }
  }

  const std::size_t nh = fe.hyperplanes.size();
  std::set<std::vector<std::size_t>> seen;
  long visited = 0;
  bool capped = false;
  for (int k = 0; k <= r && !capped; ++k) {
    for_each_subset(nh, static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& subset) {
      if (++visited > kSubsetCap) {
        capped = true;
        return false;
      }
      std::vector<RootVector> rows;
      std::vector<Rational> rhs;
      for (std::size_t h : subset) {
        rows.push_back(fe.hyperplanes[h].normal);
        rhs.push_back(fe.hyperplanes[h].level);
      }
      auto span = solve_span(rows, rhs, r);
      if (!span) return true;

      // Every hyperplane containing the whole span is tight on the face.
      std::vector<std::size_t> tight;
      for (std::size_t h = 0; h < nh; ++h) {
        const Hyperplane& hp = fe.hyperplanes[h];
        bool contains = dot(hp.normal, span->point) == hp.level;
        for (const auto& b : span->basis) contains = contains && dot(hp.normal, b) == Rational(0);
        if (contains) tight.push_back(h);
      }
      if (seen.count(tight)) return true;

      // Chebyshev centre of the face inside its span (y in radians).
      const std::size_t d = span->basis.size();
      std::vector<std::vector<double>> a;
      std::vector<double> b;
      bool parallel_violation = false;
      for (const auto& ineq : fe.inequalities) {
        if (std::find(tight.begin(), tight.end(), ineq.hyperplane) != tight.end()) continue;
        double slack = ineq.bound - boost::rational_cast<double>(dot(ineq.normal, span->point)) * kPi;
        std::vector<double> row(d + 1, 0.0);
        double norm2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          row[j] = boost::rational_cast<double>(dot(ineq.normal, span->basis[j]));
          norm2 += row[j] * row[j];
        }
        if (norm2 == 0.0) {
          if (slack <= 1e-12) parallel_violation = true;
          continue;
        }
        row[d] = std::sqrt(norm2);
        a.push_back(row);
        b.push_back(slack);
      }
      if (parallel_violation) return true;
      // Cap the radius so the programme stays bounded.
      std::vector<double> cap(d + 1, 0.0);
      cap[d] = 1.0;
      a.push_back(cap);
      b.push_back(1.0);

      double start_t = 1.0;
      for (std::size_t i = 0; i + 1 < a.size(); ++i) start_t = std::min(start_t, b[i] / a[i][d]);
      std::vector<double> start(d + 1, 0.0);
      start[d] = start_t;
      std::vector<double> c(d + 1, 0.0);
      c[d] = 1.0;
      LpResult lp = maximize(c, a, b, start);
      if (lp.status != LpStatus::optimal || lp.z[d] <= 1e-9) return true;

      seen.insert(tight);
      Face f;
      f.tight = tight;
      for (std::size_t h : tight) {
        for (const auto& src : fe.hyperplanes[h].sources) f.pinned.push_back(src);
      }
      std::sort(f.pinned.begin(), f.pinned.end(), [](const PinnedConstraint& x, const PinnedConstraint& y) {
        return std::pair(x.root, static_cast<int>(x.side)) < std::pair(y.root, static_cast<int>(y.side));
      });
      f.base_point = span->point;
      f.span_basis = span->basis;
      f.interior_point.assign(lp.z.begin(), lp.z.begin() + static_cast<long>(d));
      f.inradius = lp.z[d];
      f.dimension = static_cast<int>(d);
      fe.faces.push_back(std::move(f));
      return true;
    });
  }

  std::sort(fe.faces.begin(), fe.faces.end(), [](const Face& x, const Face& y) {
    if (x.dimension != y.dimension) return x.dimension < y.dimension;
    return x.tight > y.tight;  // larger tight sets first within a dimension
  });
  if (capped) {
    fe.complete = false;
    fe.note = "subset search stopped after " + std::to_string(kSubsetCap) + " candidates";
  } else if (r > 3) {
    fe.complete = false;
    fe.note = "rank " + std::to_string(r) + " > 3: completeness of the face search is not guaranteed";
  }
  return fe;
}

}  // namespace hermann
