#include "hermann/orbit.hpp"

#include <algorithm>
#include <cmath>

namespace hermann {

namespace {

struct RootValue {
  Angle value;
  std::optional<int> twelfth;  // k with value = k*pi/12 mod pi
  bool snapped = false;
  bool zero_mod_pi = false;
  bool half_pi_mod_pi = false;
};

RootValue evaluate_root(const CellPoint& z, const RootVector& root, double tol) {
  RootValue rv;
  rv.value = z.evaluate(root);
  rv.twelfth = twelfth_class(rv.value, tol, &rv.snapped);
  if (rv.twelfth) {
    rv.zero_mod_pi = *rv.twelfth == 0;
    rv.half_pi_mod_pi = *rv.twelfth == 6;
  }
  return rv;
}

std::vector<RootValue> evaluate_all(const SymmetricTriad& t, const CellPoint& z, double tol) {
  if (static_cast<int>(z.rank()) != t.rank) {
    throw std::invalid_argument("point has " + std::to_string(z.rank()) + " coordinates but the triad has rank " +
                                std::to_string(t.rank));
  }
  std::vector<RootValue> out;
  out.reserve(t.roots.size());
  for (const auto& r : t.roots) out.push_back(evaluate_root(z, r.root, tol));
  return out;
}

bool in_classes(const std::optional<int>& k, std::initializer_list<int> allowed) {
  return k && std::find(allowed.begin(), allowed.end(), *k) != allowed.end();
}

const char* kTheoremANote =
    "condition (I)/(II) holds: reductive decomposition h = l + m with B(l, m) = 0 and "
    "normal connection equal to the canonical connection (reported, not computed)";

}  // namespace

SingularSets singular_sets(const SymmetricTriad& t, const CellPoint& z, double tol) {
  SingularSets s;
  auto values = evaluate_all(t, z, tol);
  for (std::size_t i = 0; i < t.roots.size(); ++i) {
    const auto& rv = values[i];
    if (t.roots[i].vertical() && rv.zero_mod_pi) {
      s.vertical.push_back(i);
      s.snapped = s.snapped || rv.snapped;
    }
    if (t.roots[i].horizontal() && rv.half_pi_mod_pi) {
      s.horizontal.push_back(i);
      s.snapped = s.snapped || rv.snapped;
    }
  }
  return s;
}

int orbit_dimension(const SymmetricTriad& t, const CellPoint& z, double tol) {
  SingularSets s = singular_sets(t, z, tol);
  int dim = t.centralizer_dim + t.total_multiplicity();
  for (std::size_t i : s.vertical) dim -= t.roots[i].mV;
  for (std::size_t i : s.horizontal) dim -= t.roots[i].mH;
  return dim;
}

int normal_dimension(const SymmetricTriad& t, const CellPoint& z, double tol) {
  SingularSets s = singular_sets(t, z, tol);
  int dim = t.rank;
  for (std::size_t i : s.vertical) dim += t.roots[i].mV;
  for (std::size_t i : s.horizontal) dim += t.roots[i].mH;
  return dim;
}

std::vector<double> ShapeSpectrum::eigenvalues(const std::vector<double>& v) const {
  std::vector<double> out;
  for (const auto& e : entries) {
    double rv = 0.0;
    for (std::size_t i = 0; i < e.root.size(); ++i) rv += e.root[i] * v[i];
    double lambda = e.coeff.to_double() * rv;
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(lambda);
  }
  for (int k = 0; k < kernel_dim; ++k) out.push_back(0.0);
  return out;
}

ShapeSpectrum shape_spectrum(const SymmetricTriad& t, const CellPoint& z, double tol) {
  ShapeSpectrum s;
  s.kernel_dim = t.centralizer_dim;
  auto values = evaluate_all(t, z, tol);
  for (std::size_t i = 0; i < t.roots.size(); ++i) {
    const TriadRoot& r = t.roots[i];
    const RootValue& rv = values[i];
    if (r.vertical() && !rv.zero_mod_pi) {
      if (rv.half_pi_mod_pi) {
        s.kernel_dim += r.mV;
      } else {
        s.entries.push_back({r.root, -cot_exact(rv.value), r.mV, RootKind::vertical});
      }
    }
    if (r.horizontal() && !rv.half_pi_mod_pi) {
      if (rv.zero_mod_pi) {
        s.kernel_dim += r.mH;
      } else {
        s.entries.push_back({r.root, tan_exact(rv.value), r.mH, RootKind::horizontal});
      }
    }
  }
  return s;
}

std::vector<ExactValue> mean_curvature_components(const SymmetricTriad& t, const CellPoint& z, double tol) {
  auto values = evaluate_all(t, z, tol);
  std::vector<ExactValue> f(static_cast<std::size_t>(t.rank), ExactValue(Rational(0)));
  for (std::size_t k = 0; k < t.roots.size(); ++k) {
    const TriadRoot& r = t.roots[k];
    const RootValue& rv = values[k];
    auto check = [&](const ExactValue& v, const char* fn) {
      if (v.is_infinite() || !std::isfinite(v.to_double())) {
        throw PoleError(std::string(fn) + " of root " + root_to_string(r.root) + " is not finite at " +
                        z.to_string());
      }
    };
    if (r.vertical() && !rv.zero_mod_pi) {
      ExactValue c = rv.half_pi_mod_pi ? ExactValue(Rational(0)) : cot_exact(rv.value);
      check(c, "cot");
      for (int i = 0; i < t.rank; ++i) {
        int n = r.root[static_cast<std::size_t>(i)];
        if (n != 0) f[static_cast<std::size_t>(i)] += c * ExactValue(Rational(n * r.mV));
      }
    }
    if (r.horizontal() && !rv.half_pi_mod_pi) {
      ExactValue c = rv.zero_mod_pi ? ExactValue(Rational(0)) : tan_exact(rv.value);
      check(c, "tan");
      for (int i = 0; i < t.rank; ++i) {
        int n = r.root[static_cast<std::size_t>(i)];
        if (n != 0) f[static_cast<std::size_t>(i)] -= c * ExactValue(Rational(n * r.mH));
      }
    }
  }
  return f;
}

bool is_minimal(const SymmetricTriad& t, const CellPoint& z, double tol) {
  auto f = mean_curvature_components(t, z, tol);
  return std::all_of(f.begin(), f.end(), [tol](const ExactValue& v) { return v.is_zero(tol); });
}

bool is_austere(const ShapeSpectrum& s, double tol) {
  // The spectrum of A_v is symmetric for every v iff the multiset of linear
  // functionals coeff * root is closed under negation.
  struct Group {
    std::vector<ExactValue> functional;
    int multiplicity;
  };
  std::vector<Group> groups;
  auto same = [tol](const std::vector<ExactValue>& a, const std::vector<ExactValue>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!approx_equal(a[i], b[i], tol)) return false;
    }
    return true;
  };
  for (const auto& e : s.entries) {
    std::vector<ExactValue> fn;
    for (int n : e.root) fn.push_back(e.coeff * ExactValue(Rational(n)));
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) { return same(g.functional, fn); });
    if (it == groups.end()) {
      groups.push_back({fn, e.multiplicity});
    } else {
      it->multiplicity += e.multiplicity;
    }
  }
  for (const auto& g : groups) {
    std::vector<ExactValue> neg;
    for (const auto& c : g.functional) neg.push_back(-c);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& h) { return same(h.functional, neg); });
    if (it == groups.end() || it->multiplicity != g.multiplicity) return false;
  }
  return true;
}

bool is_austere(const SymmetricTriad& t, const CellPoint& z, double tol) {
  return is_austere(shape_spectrum(t, z, tol), tol);
}

bool is_totally_geodesic(const SymmetricTriad& t, const CellPoint& z, double tol) {
  return shape_spectrum(t, z, tol).entries.empty();
}

namespace {

ConditionCheck check_condition(const SymmetricTriad& t, const CellPoint& z, bool first) {
  ConditionCheck out;
  if (static_cast<int>(z.rank()) != t.rank) throw std::invalid_argument("rank mismatch");
  if (!z.is_exact()) {
    out.exact = false;
    out.note = "non-exact point: congruence conditions need rational multiples of pi";
    return out;
  }
  std::vector<int> classes;
  for (const auto& r : t.roots) {
    auto k = twelfth_class(z.evaluate(r.root));
    bool ok = first ? in_classes(k, {0, 2, 4, 6, 8, 10}) : in_classes(k, {0, 3, 6, 9});
    if (!ok) {
      out.note = "root " + root_to_string(r.root) + " outside the admissible congruence classes";
      return out;
    }
    classes.push_back(*k);
  }
  out.classes_ok = true;
  for (int i = 0; i < t.rank; ++i) {
    long lhs = 0;
    long rhs = 0;
    for (std::size_t k = 0; k < t.roots.size(); ++k) {
      const TriadRoot& r = t.roots[k];
      long n = r.root[static_cast<std::size_t>(i)];
      int c = classes[k];
      long v = n * r.mV;
      long h = n * r.mH;
      if (first) {
        if (c == 2) lhs += 3 * v;
        if (c == 4) lhs += v;
        if (c == 8) lhs += 3 * h, rhs += v;
        if (c == 10) lhs += h, rhs += 3 * v;
        if (c == 2) rhs += h;
        if (c == 4) rhs += 3 * h;
      } else {
        if (c == 3) lhs += v, rhs += h;
        if (c == 9) lhs += h, rhs += v;
      }
    }
    if (lhs != rhs) {
      out.note = "balance fails for index " + std::to_string(i + 1) + ": " + std::to_string(lhs) +
                 " != " + std::to_string(rhs);
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace

ConditionCheck check_condition_I(const SymmetricTriad& t, const CellPoint& z) { return check_condition(t, z, true); }
ConditionCheck check_condition_II(const SymmetricTriad& t, const CellPoint& z) { return check_condition(t, z, false); }

char theorem_letter(Theorem th) { return "BCDEF"[static_cast<int>(th)]; }

std::vector<Theorem> TheoremSet::list() const {
  std::vector<Theorem> out;
  for (Theorem th : {Theorem::B, Theorem::C, Theorem::D, Theorem::E, Theorem::F}) {
    if (contains(th)) out.push_back(th);
  }
  return out;
}

std::string TheoremSet::to_string() const {
  std::string s = "{";
  for (Theorem th : list()) {
    if (s.size() > 1) s += ",";
    s += theorem_letter(th);
  }
  return s + "}";
}

std::string OrbitReport::theorem_label() const {
  for (Theorem th : {Theorem::F, Theorem::C, Theorem::D, Theorem::E}) {
    if (theorems.contains(th)) return std::string("as in Theorem ") + theorem_letter(th);
  }
  return "not as in Theorems C-F";
}

std::string OrbitReport::shape_label() const {
  if (dim_orbit == 0) return "one-point set";
  if (totally_geodesic) return "totally geodesic";
  if (austere) return "austere";
  return "not austere";
}

OrbitReport classify(const SymmetricTriad& t, const CellPoint& z, double tol) {
  OrbitReport rep;
  rep.z = z;
  rep.exact = z.is_exact();
  auto values = evaluate_all(t, z, tol);
  SingularSets sing = singular_sets(t, z, tol);
  rep.snapped = sing.snapped;
  rep.dim_orbit = orbit_dimension(t, z, tol);
  rep.dim_normal = normal_dimension(t, z, tol);
  rep.spectrum = shape_spectrum(t, z, tol);
  rep.kernel_dim = rep.spectrum.kernel_dim;
  rep.mean_curvature = mean_curvature_components(t, z, tol);
  rep.minimal = std::all_of(rep.mean_curvature.begin(), rep.mean_curvature.end(),
                            [tol](const ExactValue& v) { return v.is_zero(tol); });
  rep.totally_geodesic = rep.spectrum.entries.empty();
  rep.austere = is_austere(rep.spectrum, tol);

  ConditionCheck c1 = check_condition_I(t, z);
  ConditionCheck c2 = check_condition_II(t, z);
  rep.condition_I = c1.holds;
  rep.condition_II = c2.holds;
  if (!rep.exact) rep.notes.push_back("non-exact point: conditions (I)/(II) and Theorems B-E not evaluated");
  if (rep.snapped) rep.notes.push_back("snapped: a root value within tolerance of a congruence class was treated as on it");

  const bool disjoint = !t.has_overlapping_roots();
  auto all_roots = [&](auto pred) {
    for (std::size_t k = 0; k < t.roots.size(); ++k) {
      if (!pred(t.roots[k], values[k].twelfth)) return false;
    }
    return true;
  };
  auto split_classes = [&](std::initializer_list<int> v_classes, std::initializer_list<int> h_classes) {
    return all_roots([&](const TriadRoot& r, const std::optional<int>& k) {
      if (r.vertical() && !in_classes(k, v_classes)) return false;
      if (r.horizontal() && !in_classes(k, h_classes)) return false;
      return true;
    });
  };
  const bool equal_mult =
      std::all_of(t.roots.begin(), t.roots.end(), [](const TriadRoot& r) { return r.mV == r.mH; });

  if ((c1.holds || c2.holds) && equal_mult &&
      all_roots([](const TriadRoot&, const std::optional<int>& k) { return in_classes(k, {0, 3, 6, 9}); })) {
    rep.theorems.insert(Theorem::B);
  }
  if (c1.holds && disjoint && split_classes({0, 4, 8}, {2, 6, 10})) rep.theorems.insert(Theorem::C);
  if (c1.holds && disjoint && split_classes({0, 2, 10}, {4, 6, 8})) rep.theorems.insert(Theorem::D);
  if (c2.holds && disjoint && split_classes({0, 3, 9}, {3, 6, 9})) rep.theorems.insert(Theorem::E);
  if (disjoint &&
      all_roots([](const TriadRoot&, const std::optional<int>& k) { return in_classes(k, {0, 6}); })) {
    // Overlap with C-E only happens when every root is singular; report F alone.
    rep.theorems.insert(Theorem::F);
    rep.theorems.erase(Theorem::C);
    rep.theorems.erase(Theorem::D);
    rep.theorems.erase(Theorem::E);
  }

  if (t.cohomogeneity_equals_rank) {
    if (rep.theorems.contains(Theorem::F)) {
      rep.metric_constant = Rational(1);
    } else if (rep.theorems.contains(Theorem::C)) {
      rep.metric_constant = Rational(3, 4);
    } else if (rep.theorems.contains(Theorem::D)) {
      rep.metric_constant = Rational(1, 4);
    } else if (rep.theorems.contains(Theorem::E)) {
      rep.metric_constant = Rational(1, 2);
    }
  }
  if (rep.minimal && (c1.holds || c2.holds)) rep.notes.push_back(kTheoremANote);
  return rep;
}

}  // namespace hermann
