#include "hermann/triad.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hermann {

const TriadRoot* SymmetricTriad::find_root(const RootVector& v) const {
  for (const auto& r : roots) {
    if (r.root == v) return &r;
  }
  return nullptr;
}

bool SymmetricTriad::has_overlapping_roots() const {
  return std::any_of(roots.begin(), roots.end(),
                     [](const TriadRoot& r) { return r.vertical() && r.horizontal(); });
}

int SymmetricTriad::total_multiplicity() const {
  int sum = 0;
  for (const auto& r : roots) sum += r.mV + r.mH;
  return sum;
}

bool CellPoint::is_exact() const {
  return std::all_of(coords.begin(), coords.end(), [](const Angle& a) { return a.is_exact(); });
}

Angle CellPoint::evaluate(const RootVector& root) const {
  if (root.size() != coords.size()) {
    throw std::invalid_argument("root of length " + std::to_string(root.size()) +
                                " evaluated at a point of rank " + std::to_string(coords.size()));
  }
  Angle sum;
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (root[i] != 0) sum += coords[i] * root[i];
  }
  return sum;
}

std::vector<double> CellPoint::to_radians() const {
  std::vector<double> out;
  out.reserve(coords.size());
  for (const auto& a : coords) out.push_back(a.to_radians());
  return out;
}

std::string CellPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ", ";
    s += coords[i].to_string();
  }
  return s + ")";
}

CellPoint parse_cell_point(std::string_view text) {
  // Split on commas that are not nested inside parentheses.
  std::vector<Angle> coords;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      coords.push_back(Angle::parse(text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return CellPoint(std::move(coords));
}

std::vector<std::string> validate(const SymmetricTriad& t) {
  std::vector<std::string> out;
  if (t.rank <= 0) out.push_back("rank must be positive");
  if (t.centralizer_dim < 0) out.push_back("centralizer_dim must be non-negative");
  std::set<RootVector> seen;
  for (const auto& r : t.roots) {
    const std::string label = root_to_string(r.root);
    if (static_cast<int>(r.root.size()) != t.rank) {
      out.push_back("root " + label + " has length " + std::to_string(r.root.size()) +
                    ", expected rank " + std::to_string(t.rank));
    }
    if (std::all_of(r.root.begin(), r.root.end(), [](int c) { return c == 0; })) {
      out.push_back("root " + label + " is the zero vector");
    }
    if (std::any_of(r.root.begin(), r.root.end(), [](int c) { return c < 0; })) {
      out.push_back("root " + label + " has a negative coefficient");
    }
    if (r.mV < 0 || r.mH < 0) out.push_back("root " + label + " has a negative multiplicity");
    if (r.mV + r.mH < 1) out.push_back("root " + label + " has mV + mH = 0");
    if (!seen.insert(r.root).second) out.push_back("root " + label + " appears twice");
  }
  if (t.ambient_dim) {
    int sum = t.rank + t.centralizer_dim + t.total_multiplicity();
    if (sum != *t.ambient_dim) {
      out.push_back("dimension identity fails: rank + centralizer_dim + sum(mV + mH) = " +
                    std::to_string(sum) + " but ambient_dim = " + std::to_string(*t.ambient_dim));
    }
  }
  return out;
}

const SymmetricTriad* find_triad(std::string_view key) {
  for (const auto& t : catalog()) {
    if (t.id == key || t.name == key) return &t;
  }
  return nullptr;
}

const SymmetricTriad& triad_by_name(std::string_view key) {
  if (const SymmetricTriad* t = find_triad(key)) return *t;
  throw std::out_of_range("unknown triad '" + std::string(key) + "'");
}

RootVector root_sum(int rank, int i, int j) {
  RootVector v(static_cast<std::size_t>(rank), 0);
  for (int k = i; k <= j; ++k) v[static_cast<std::size_t>(k - 1)] = 1;
  return v;
}

std::string root_to_string(const RootVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (v[i] != 1) s += std::to_string(v[i]);
    s += "b" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

SymmetricTriad example_triad_A(int n, int m) {
  if (n < 0) throw std::invalid_argument("example_triad_A: n must be non-negative");
  if (m != 1 && m != 4) throw std::invalid_argument("example_triad_A: m must be 1 or 4");
  const int r = 3 * n + 2;
  SymmetricTriad t;
  t.id = "example-a" + std::to_string(r) + "-m" + std::to_string(m);
  t.name = m == 1 ? "isotropy action of SU(" + std::to_string(r + 1) + ")/SO(" + std::to_string(r + 1) + ")"
                  : "isotropy action of SU(" + std::to_string(2 * r + 2) + ")/Sp(" + std::to_string(r + 1) + ")";
  t.rank = r;
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= r; ++j) t.roots.push_back({root_sum(r, i, j), m, 0});
  }
  t.ambient_dim = r + m * static_cast<int>(t.roots.size());
  return t;
}

SymmetricTriad example_triad_C(int n) {
  if (n < 0) throw std::invalid_argument("example_triad_C: n must be non-negative");
  const int r = 3 * n + 2;
  SymmetricTriad t;
  t.id = "example-c" + std::to_string(r);
  t.name = "isotropy action of Sp(" + std::to_string(r) + ")/U(" + std::to_string(r) + ")";
  t.rank = r;
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= r; ++j) t.roots.push_back({root_sum(r, i, j), 1, 0});
  }
  // 2(b_i + ... + b_{r-1}) + b_r
  for (int i = 1; i <= r - 1; ++i) {
    RootVector v(static_cast<std::size_t>(r), 0);
    for (int k = i; k <= r - 1; ++k) v[static_cast<std::size_t>(k - 1)] = 2;
    v[static_cast<std::size_t>(r - 1)] = 1;
    t.roots.push_back({v, 1, 0});
  }
  // b_i + ... + b_{j-1} + 2(b_j + ... + b_{r-1}) + b_r
  for (int i = 1; i <= r - 1; ++i) {
    for (int j = i + 1; j <= r - 1; ++j) {
      RootVector v(static_cast<std::size_t>(r), 0);
      for (int k = i; k <= j - 1; ++k) v[static_cast<std::size_t>(k - 1)] = 1;
      for (int k = j; k <= r - 1; ++k) v[static_cast<std::size_t>(k - 1)] = 2;
      v[static_cast<std::size_t>(r - 1)] = 1;
      t.roots.push_back({v, 1, 0});
    }
  }
  t.ambient_dim = r + static_cast<int>(t.roots.size());
  return t;
}

SymmetricTriad example_triad_CP2() {
  SymmetricTriad t;
  t.id = "example-cp2";
  t.name = "isotropy action of SU(3)/S(U(1)xU(2))";
  t.rank = 1;
  t.roots = {{{1}, 2, 0}, {{2}, 1, 0}};
  t.ambient_dim = 4;
  return t;
}

SymmetricTriad example_triad(int which, int n) {
  switch (which) {
    case 1: return example_triad_A(n, 1);
    case 2: return example_triad_A(n, 4);
    case 3: return example_triad_CP2();
    case 4: return example_triad_C(n);
    default: throw std::invalid_argument("example id must be 1, 2, 3 or 4");
  }
}

ExamplePoint example_Z(int which, int n) {
  if (which < 1 || which > 4) throw std::invalid_argument("example id must be 1, 2, 3 or 4");
  if (n < 0) throw std::invalid_argument("example_Z: n must be non-negative");
  ExamplePoint out;
  if (which == 3) {
    out.z = CellPoint({Angle::pi_times(1, 3)});
    return out;
  }
  const int r = 3 * n + 2;
  out.z.coords.assign(static_cast<std::size_t>(r), Angle());
  std::vector<int> positions = {n + 1, 2 * n + 2};
  if (which == 4) positions.push_back(3 * n + 2);
  std::set<int> used;
  for (int p : positions) {
    if (!used.insert(p).second) out.index_collision = true;
    out.z.coords[static_cast<std::size_t>(p - 1)] = Angle::pi_times(1, 3);
  }
  return out;
}

}  // namespace hermann
