#include "hermann/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <Eigen/Dense>

namespace hermann {

namespace {

bool close(const CellPoint& a, const CellPoint& b, double tol) {
  auto x = a.to_radians();
  auto y = b.to_radians();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

// Parameters p with z = base + D p, if the point fits the pattern.
std::optional<std::vector<double>> fit_pattern(const FreePattern& p, const CellPoint& z, double tol) {
  auto x = z.to_radians();
  const auto r = static_cast<Eigen::Index>(x.size());
  const auto k = static_cast<Eigen::Index>(p.directions.size());
  Eigen::MatrixXd d(r, k);
  Eigen::VectorXd rhs(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    rhs(i) = x[static_cast<std::size_t>(i)] - boost::rational_cast<double>(p.base[static_cast<std::size_t>(i)]) * kPi;
    for (Eigen::Index j = 0; j < k; ++j) d(i, j) = p.directions[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd sol = d.colPivHouseholderQr().solve(rhs);
  if ((d * sol - rhs).norm() > tol) return std::nullopt;
  return std::vector<double>(sol.data(), sol.data() + sol.size());
}

std::string point_string(const CellPoint& z) { return z.to_string(); }

}  // namespace

int TableReport::passed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const RowResult& r) { return r.pass; }));
}

bool TableReport::all_pass() const { return passed() == static_cast<int>(rows.size()); }

TableReport reproduce_table(const ExpectedTable& table, const MinimalOrbitSet& set, double tol) {
  const SymmetricTriad& t = triad_by_name(table.triad);
  TableReport rep;
  rep.table = table.id;
  rep.triad = table.triad;
  rep.solution_count = set.solutions.size();
  std::vector<bool> used(set.solutions.size(), false);

  for (const ExpectedRow& row : table.rows) {
    RowResult rr;
    rr.expected = row;
    const MinimalOrbit* hit = nullptr;

    if (row.point) {
      auto try_point = [&](const CellPoint& printed, const std::string& label) -> const MinimalOrbit* {
        CellPoint target = reduce_to_cell(t, printed, tol);
        for (std::size_t i = 0; i < set.solutions.size(); ++i) {
          if (close(set.solutions[i].z, target, tol)) {
            used[i] = true;
            if (!close(target, printed, tol)) {
              rr.messages.push_back(label + " lies outside the cell; reflected into it as " + point_string(target));
            }
            return &set.solutions[i];
          }
        }
        return nullptr;
      };
      hit = try_point(*row.point, row.label);
      if (!hit && row.alternate) {
        hit = try_point(*row.alternate, row.alternate_label);
        if (hit) {
          rr.messages.push_back("printed form " + row.label + " is not a minimal orbit; the alternate form " +
                                row.alternate_label + " matches");
        }
      } else if (hit && row.alternate) {
        rr.messages.push_back("printed form " + row.label + " matches; alternate form " + row.alternate_label + " does not");
      }
      if (hit) {
        rr.point_ok = true;
        if (row.point->is_exact() && !(hit->z.is_exact() && hit->z == reduce_to_cell(t, *row.point, tol))) {
          rr.point_ok = false;
          rr.messages.push_back("rational point reproduced only numerically");
        }
      }
    } else if (row.pattern) {
      const int params = static_cast<int>(row.pattern->parameters.size());
      for (std::size_t i = 0; i < set.solutions.size() && !hit; ++i) {
        const MinimalOrbit& s = set.solutions[i];
        if (set.faces.faces[s.face_index].dimension != params) continue;
        auto p = fit_pattern(*row.pattern, s.z, tol);
        if (!p) continue;
        hit = &s;
        used[i] = true;
        rr.point_ok = true;
        for (std::size_t k = 0; k < p->size(); ++k) {
          for (const Rational& ex : row.pattern->excluded) {
            if (distance_mod_pi((*p)[k], boost::rational_cast<double>(ex) * kPi) < tol) {
              rr.point_ok = false;
              rr.messages.push_back(row.pattern->parameters[k] + " = " + Angle::pi_times(ex).to_string() +
                                    " (mod pi) is excluded");
            }
          }
        }
        std::ostringstream os;
        os.precision(12);
        for (std::size_t k = 0; k < p->size(); ++k) {
          os << (k ? ", " : "") << row.pattern->parameters[k] << " = " << (*p)[k];
        }
        rr.messages.push_back(os.str());
      }
    }

    if (hit) {
      rr.matched = true;
      rr.found = hit->z;
      rr.found_dim = hit->report.dim_orbit;
      rr.found_theorem = hit->report.theorem_label();
      rr.found_shape = hit->report.shape_label();
      rr.dim_ok = rr.found_dim == row.dim;
      rr.classification_ok = rr.found_theorem == row.theorem_label && rr.found_shape == row.shape_label;
      if (!hit->report.minimal) {
        rr.messages.push_back("warning: mean curvature does not vanish here (nonzero normal component to the face)");
      }
      if (!rr.dim_ok) rr.messages.push_back("dim " + std::to_string(rr.found_dim) + " != " + std::to_string(row.dim));
      if (!rr.classification_ok) {
        rr.messages.push_back("classified \"" + rr.found_theorem + ", " + rr.found_shape + "\" but the table says \"" +
                              row.theorem_label + ", " + row.shape_label + "\"");
        if (rr.found_theorem != row.theorem_label && hit->report.condition_I) {
          rr.messages.push_back("condition (I) holds exactly at this point");
        }
      }
    } else {
      rr.messages.push_back("no minimal orbit found at this point");
    }
    rr.pass = rr.matched && rr.point_ok && rr.dim_ok && rr.classification_ok;
    rep.rows.push_back(std::move(rr));
  }
  for (std::size_t i = 0; i < set.solutions.size(); ++i) {
    if (!used[i]) rep.extras.push_back(set.solutions[i]);
  }
  return rep;
}

TableReport reproduce_table(int table_id, const EnumerateOptions& opts) {
  const ExpectedTable& table = expected_table(table_id);
  return reproduce_table(table, enumerate_minimal_orbits(triad_by_name(table.triad), opts), opts.tolerance);
}

std::vector<Prop41Result> check_proposition_4_1(double tol) {
  static const char* kTriads[] = {"su6-sp3-so6", "so5xso5-so5-equal", "sp2xsp2-sp2-equal", "e6-f4-sp4",
                                  "g2xg2-g2-equal"};
  std::vector<Prop41Result> out;
  for (const char* name : kTriads) {
    const SymmetricTriad& t = triad_by_name(name);
    for (const char* z : {"0,pi/4", "pi/4,0", "pi/4,pi/4"}) {
      Prop41Result r;
      r.triad = name;
      r.z = parse_cell_point(z);
      OrbitReport rep = classify(t, r.z, tol);
      r.austere = rep.austere;
      r.totally_geodesic = rep.totally_geodesic;
      r.tag_B = rep.theorems.contains(Theorem::B);
      r.pass = r.austere && !r.totally_geodesic && r.tag_B;
      out.push_back(r);
    }
  }
  return out;
}

std::pair<std::vector<RootVector>, std::vector<RootVector>> displayed_congruence_sets(int example, int n) {
  const int r = 3 * n + 2;
  std::vector<RootVector> p3, p23;
  auto b = [&](int i, int j) { return root_sum(r, i, j); };
  // hat beta_i = 2(beta_i + ... + beta_{r-1}) + beta_r
  auto hat = [&](int i) {
    RootVector v(static_cast<std::size_t>(r), 0);
    for (int k = i; k < r; ++k) v[static_cast<std::size_t>(k - 1)] = 2;
    v[static_cast<std::size_t>(r - 1)] = 1;
    return v;
  };
  // hat beta_ij = beta_i + ... + beta_{j-1} + 2(beta_j + ... + beta_{r-1}) + beta_r
  auto hat2 = [&](int i, int j) {
    RootVector v = hat(j);
    for (int k = i; k < j; ++k) v[static_cast<std::size_t>(k - 1)] = 1;
    return v;
  };
  if (example == 1 || example == 2) {
    for (int i = 1; i <= r; ++i) {
      for (int j = i; j <= r; ++j) {
        if ((1 <= i && i <= n + 1 && n + 1 <= j && j < 2 * n + 2) || (n + 1 < i && i <= 2 * n + 2 && 2 * n + 2 <= j && j <= r)) {
          p3.push_back(b(i, j));
        }
        if (1 <= i && i <= n + 1 && 2 * n + 2 <= j && j <= r) p23.push_back(b(i, j));
      }
    }
  } else if (example == 4) {
    for (int i = 1; i <= r; ++i) {
      for (int j = i; j <= r; ++j) {
        if ((1 <= i && i <= n + 1 && n + 1 <= j && j < 2 * n + 2) ||
            (n + 1 < i && i <= 2 * n + 2 && 2 * n + 2 <= j && j < 3 * n + 2) || (2 * n + 3 <= i && j == 3 * n + 2)) {
          p3.push_back(b(i, j));
        }
        if ((1 <= i && i <= n + 1 && 2 * n + 2 <= j && j <= 3 * n + 1) || (n + 2 <= i && i <= 2 * n + 2 && j == 3 * n + 2)) {
          p23.push_back(b(i, j));
        }
      }
    }
    for (int i = 1; i <= 3 * n + 1; ++i) {
      if (2 * n + 3 <= i) p3.push_back(hat(i));
      if (i <= n + 1) p23.push_back(hat(i));
    }
    for (int i = 1; i <= 3 * n + 1; ++i) {
      for (int j = i + 1; j <= 3 * n + 1; ++j) {
        if ((2 * n + 3 <= i) || (i <= n + 1 && n + 1 < j && j <= 2 * n + 2)) p3.push_back(hat2(i, j));
        if ((j <= n + 1) || (n + 2 <= i && i <= 2 * n + 2 && 2 * n + 2 < j)) p23.push_back(hat2(i, j));
      }
    }
  } else {
    throw std::invalid_argument("example " + std::to_string(example) + " displays no congruence sets");
  }
  return {p3, p23};
}

std::vector<ExampleResult> check_examples(int n_max) {
  std::vector<ExampleResult> out;
  for (int which = 1; which <= 4; ++which) {
    for (int n = 0; n <= n_max; ++n) {
      if (which == 3 && n > 0) break;
      ExampleResult r;
      r.example = which;
      r.n = which == 3 ? 0 : n;
      SymmetricTriad t = example_triad(which, n);
      ExamplePoint ep = example_Z(which, n);
      r.z = ep.z;
      r.index_collision = ep.index_collision;
      if (r.index_collision) r.messages.push_back("index formulas collide; later assignments overwrite earlier ones");
      r.condition_I = check_condition_I(t, ep.z).holds;
      r.minimal = is_minimal(t, ep.z);
      r.austere = is_austere(t, ep.z);

      std::set<RootVector> c3, c23;
      for (const auto& root : t.roots) {
        auto k = twelfth_class(ep.z.evaluate(root.root));
        if (k == 4) c3.insert(root.root);
        if (k == 8) c23.insert(root.root);
      }
      r.computed_pi3 = c3.size();
      r.computed_2pi3 = c23.size();
      r.sets_match = true;
      if (which != 3) {
        r.sets_available = true;
        auto [d3, d23] = displayed_congruence_sets(which, n);
        std::set<RootVector> s3(d3.begin(), d3.end()), s23(d23.begin(), d23.end());
        r.displayed_pi3 = s3.size();
        r.displayed_2pi3 = s23.size();
        r.sets_match = s3 == c3 && s23 == c23 && d3.size() == s3.size() && d23.size() == s23.size();
        if (!r.sets_match) {
          r.messages.push_back("displayed sets give " + std::to_string(r.displayed_pi3) + " roots at pi/3 and " +
                               std::to_string(r.displayed_2pi3) + " at 2pi/3; Z_0 gives " + std::to_string(r.computed_pi3) +
                               " and " + std::to_string(r.computed_2pi3));
        }
      }
      r.pass = r.condition_I && r.minimal && !r.austere && r.sets_match;
      out.push_back(r);
    }
  }
  return out;
}

// ---------------------------------------------------------------- text output

std::string render_text(const TableReport& r) {
  std::ostringstream os;
  const SymmetricTriad& t = triad_by_name(r.triad);
  os << "Table " << r.table << ": " << t.name << " [" << r.triad << "], " << r.solution_count << " minimal orbits\n";
  for (const auto& row : r.rows) {
    os << "  " << (row.pass ? "PASS" : "FAIL") << "  " << row.expected.label << "  dim " << row.expected.dim << ", "
       << row.expected.theorem_label << ", " << row.expected.shape_label << "\n";
    if (row.found) {
      os << "        found " << row.found->to_string() << "  dim " << row.found_dim << ", " << row.found_theorem << ", "
         << row.found_shape << "\n";
    }
    for (const auto& m : row.messages) os << "        " << m << "\n";
  }
  for (const auto& e : r.extras) {
    os << "  EXTRA " << e.z.to_string() << "  dim " << e.report.dim_orbit << ", " << e.report.theorem_label() << ", "
       << e.report.shape_label() << "  (not listed in the table)\n";
  }
  os << "  " << r.passed() << "/" << r.rows.size() << " rows pass";
  if (!r.extras.empty()) os << ", " << r.extras.size() << " unlisted solution(s) flagged";
  os << "\n";
  return os.str();
}

std::string render_text(const std::vector<Prop41Result>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.triad << " at " << r.z.to_string() << ": "
       << (r.austere ? "austere" : "not austere") << ", " << (r.totally_geodesic ? "totally geodesic" : "not totally geodesic")
       << ", " << (r.tag_B ? "tag B" : "no tag B") << "\n";
  }
  return os.str();
}

std::string render_text(const std::vector<ExampleResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  Example " << r.example;
    if (r.example != 3) os << " n=" << r.n;
    os << " Z0=" << r.z.to_string() << ": condition (I) " << (r.condition_I ? "holds" : "fails") << ", "
       << (r.minimal ? "minimal" : "not minimal") << ", " << (r.austere ? "austere" : "not austere");
    os << ", |pi/3|=" << r.computed_pi3 << " |2pi/3|=" << r.computed_2pi3;
    if (r.sets_available) os << " (displayed " << r.displayed_pi3 << "/" << r.displayed_2pi3 << ")";
    os << "\n";
    for (const auto& m : r.messages) os << "        " << m << "\n";
  }
  return os.str();
}

std::string render_text(const SymmetricTriad& t) {
  std::ostringstream os;
  os << t.name;
  if (!t.id.empty()) os << " [" << t.id << "]";
  os << "\n  rank " << t.rank << ", centralizer " << t.centralizer_dim;
  if (t.ambient_dim) os << ", ambient dimension " << *t.ambient_dim;
  os << "\n  vertical:  ";
  bool first = true;
  for (const auto& r : t.roots) {
    if (!r.vertical()) continue;
    os << (first ? "" : ", ") << root_to_string(r.root) << " (" << r.mV << ")";
    first = false;
  }
  os << "\n  horizontal: ";
  first = true;
  for (const auto& r : t.roots) {
    if (!r.horizontal()) continue;
    os << (first ? "" : ", ") << root_to_string(r.root) << " (" << r.mH << ")";
    first = false;
  }
  os << "\n";
  return os.str();
}

std::string render_text(const OrbitReport& r, const SymmetricTriad& t) {
  std::ostringstream os;
  os << "Z = " << r.z.to_string() << (r.exact ? " (exact)" : " (numeric)") << "\n";
  os << "  dim orbit " << r.dim_orbit << ", dim normal " << r.dim_normal << ", kernel " << r.kernel_dim << "\n";
  os << "  minimal " << (r.minimal ? "yes" : "no") << ", austere " << (r.austere ? "yes" : "no") << ", totally geodesic "
     << (r.totally_geodesic ? "yes" : "no") << "\n";
  os << "  condition (I) " << (r.condition_I ? "holds" : "fails") << ", condition (II) "
     << (r.condition_II ? "holds" : "fails") << "\n";
  os << "  theorems " << r.theorems.to_string() << ": " << r.theorem_label() << ", " << r.shape_label() << "\n";
  if (r.metric_constant) {
    os << "  metric constant c = " << r.metric_constant->numerator();
    if (r.metric_constant->denominator() != 1) os << "/" << r.metric_constant->denominator();
    os << "\n";
  }
  os << "  mean curvature components (";
  for (std::size_t i = 0; i < r.mean_curvature.size(); ++i) os << (i ? ", " : "") << r.mean_curvature[i].to_string();
  os << ")\n  shape spectrum:\n";
  for (const auto& e : r.spectrum.entries) {
    os << "    " << (e.kind == RootKind::vertical ? "V " : "H ") << root_to_string(e.root) << ": " << e.coeff.to_string()
       << " x" << e.multiplicity << "\n";
  }
  (void)t;
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string render_text(const MinimalOrbitSet& s, const SymmetricTriad& t, bool verbose) {
  std::ostringstream os;
  os << t.name << ": " << s.faces.faces.size() << " faces, " << s.solutions.size() << " minimal orbits\n";
  for (const auto& m : s.solutions) {
    const Face& f = s.faces.faces[m.face_index];
    os << "  " << m.z.to_string() << "  dim " << m.report.dim_orbit << ", " << m.report.theorem_label() << ", "
       << m.report.shape_label() << "  [" << f.describe(t, s.faces.hyperplanes) << "]\n";
  }
  if (verbose) {
    os << "face diagnostics:\n";
    for (const auto& o : s.outcomes) {
      os << "  face " << o.face_index << " dim " << o.dimension << " [" << o.face << "]: "
         << (o.solved ? "solved" : "unsolved") << ", iterations " << o.diagnostics.iterations << ", |grad| "
         << o.diagnostics.gradient_norm << (o.diagnostics.snapped ? ", snapped to exact" : "")
         << (o.diagnostics.degenerate ? ", degenerate" : "");
      if (!o.diagnostics.message.empty()) os << " (" << o.diagnostics.message << ")";
      os << "\n";
    }
  }
  for (const auto& n : s.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace hermann
