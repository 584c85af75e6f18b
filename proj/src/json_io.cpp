#include "hermann/json_io.hpp"

#include <fstream>

namespace hermann {

namespace {

std::string rational_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError("expected a rational number");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational \"" + s + "\"");
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

const char* kind_name(RootKind k) { return k == RootKind::vertical ? "V" : "H"; }

}  // namespace

Json angle_to_json(const Angle& a) {
  if (a.is_exact()) {
    Rational r = a.pi_multiple();
    return {{"pi_rational", {r.numerator(), r.denominator()}}};
  }
  return {{"radians", a.to_radians()}};
}

Angle angle_from_json(const Json& j) {
  if (j.is_object() && j.contains("pi_rational")) {
    auto pq = j.at("pi_rational");
    if (!pq.is_array() || pq.size() != 2 || pq[1].get<std::int64_t>() <= 0) throw ParseError("bad pi_rational");
    return Angle::pi_times(pq[0].get<std::int64_t>(), pq[1].get<std::int64_t>());
  }
  if (j.is_object() && j.contains("radians")) return Angle::radians(j.at("radians").get<double>());
  if (j.is_string()) return Angle::parse(j.get<std::string>());
  if (j.is_number()) return Angle::radians(j.get<double>());
  throw ParseError("angle must be {\"pi_rational\": [p, q]} or {\"radians\": x}");
}

Json point_to_json(const CellPoint& z) {
  Json out = Json::array();
  for (const auto& a : z.coords) {
    if (a.is_exact()) {
      out.push_back(a.to_pq_string());
    } else {
      out.push_back(a.to_radians());
    }
  }
  return out;
}

CellPoint point_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("cell point must be an array");
  CellPoint z;
  for (const auto& a : j) z.coords.push_back(angle_from_json(a));
  return z;
}

Json value_to_json(const ExactValue& v) {
  if (v.is_infinite()) return "infinite";
  if (v.is_numeric()) return v.to_double();
  return {{"a", rational_string(v.rational_part())}, {"b", rational_string(v.sqrt3_part())}, {"sqrt", 3}};
}

ExactValue value_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "infinite") return ExactValue::infinite();
  if (j.is_number()) return ExactValue::numeric(j.get<double>());
  if (j.is_object()) return ExactValue(rational_from(j.at("a")), rational_from(j.at("b")));
  throw ParseError("bad exact value");
}

Json triad_to_json(const SymmetricTriad& t) {
  Json roots = Json::array();
  for (const auto& r : t.roots) roots.push_back({{"coeffs", r.root}, {"mV", r.mV}, {"mH", r.mH}});
  Json j;
  if (!t.id.empty()) j["id"] = t.id;
  j["name"] = t.name;
  j["rank"] = t.rank;
  j["roots"] = roots;
  j["centralizer_dim"] = t.centralizer_dim;
  j["ambient_dim"] = t.ambient_dim ? Json(*t.ambient_dim) : Json(nullptr);
  j["cohomogeneity_equals_rank"] = t.cohomogeneity_equals_rank;
  return j;
}

SymmetricTriad triad_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("triad must be a JSON object");
  SymmetricTriad t;
  if (j.contains("id")) t.id = field<std::string>(j, "id");
  t.name = field<std::string>(j, "name");
  t.rank = field<int>(j, "rank");
  if (!j.contains("roots") || !j.at("roots").is_array()) throw ParseError("missing array \"roots\"");
  for (const auto& r : j.at("roots")) {
    TriadRoot tr;
    tr.root = field<std::vector<int>>(r, "coeffs");
    tr.mV = field<int>(r, "mV");
    tr.mH = field<int>(r, "mH");
    t.roots.push_back(tr);
  }
  t.centralizer_dim = j.contains("centralizer_dim") ? field<int>(j, "centralizer_dim") : 0;
  if (j.contains("ambient_dim") && !j.at("ambient_dim").is_null()) t.ambient_dim = field<int>(j, "ambient_dim");
  t.cohomogeneity_equals_rank = j.contains("cohomogeneity_equals_rank") ? field<bool>(j, "cohomogeneity_equals_rank") : true;
  return t;
}

SymmetricTriad load_triad_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return triad_from_json(j);
}

Json report_to_json(const OrbitReport& r) {
  Json j;
  j["z"] = point_to_json(r.z);
  j["exact"] = r.exact;
  j["snapped"] = r.snapped;
  j["dim_orbit"] = r.dim_orbit;
  j["dim_normal"] = r.dim_normal;
  j["kernel_dim"] = r.kernel_dim;
  j["minimal"] = r.minimal;
  j["austere"] = r.austere;
  j["totally_geodesic"] = r.totally_geodesic;
  j["condition_I"] = r.condition_I;
  j["condition_II"] = r.condition_II;
  Json tags = Json::array();
  for (Theorem th : r.theorems.list()) tags.push_back(std::string(1, theorem_letter(th)));
  j["theorem_tags"] = tags;
  j["metric_constant"] = r.metric_constant ? Json(rational_string(*r.metric_constant)) : Json(nullptr);
  j["classification"] = r.theorem_label();
  j["shape"] = r.shape_label();
  Json h = Json::array();
  for (const auto& v : r.mean_curvature) h.push_back(value_to_json(v));
  j["mean_curvature"] = h;
  Json entries = Json::array();
  for (const auto& e : r.spectrum.entries) {
    entries.push_back({{"root", e.root}, {"coeff", value_to_json(e.coeff)}, {"multiplicity", e.multiplicity},
                       {"kind", kind_name(e.kind)}});
  }
  j["spectrum"] = {{"entries", entries}, {"kernel_dim", r.spectrum.kernel_dim}};
  j["notes"] = r.notes;
  return j;
}

OrbitReport report_from_json(const Json& j) {
  OrbitReport r;
  r.z = point_from_json(j.at("z"));
  r.exact = j.at("exact").get<bool>();
  r.snapped = j.at("snapped").get<bool>();
  r.dim_orbit = j.at("dim_orbit").get<int>();
  r.dim_normal = j.at("dim_normal").get<int>();
  r.kernel_dim = j.at("kernel_dim").get<int>();
  r.minimal = j.at("minimal").get<bool>();
  r.austere = j.at("austere").get<bool>();
  r.totally_geodesic = j.at("totally_geodesic").get<bool>();
  r.condition_I = j.at("condition_I").get<bool>();
  r.condition_II = j.at("condition_II").get<bool>();
  for (const auto& tag : j.at("theorem_tags")) {
    std::string s = tag.get<std::string>();
    if (s.size() != 1 || s[0] < 'B' || s[0] > 'F') throw ParseError("bad theorem tag " + s);
    r.theorems.insert(static_cast<Theorem>(s[0] - 'B'));
  }
  if (!j.at("metric_constant").is_null()) r.metric_constant = rational_from(j.at("metric_constant"));
  for (const auto& v : j.at("mean_curvature")) r.mean_curvature.push_back(value_from_json(v));
  for (const auto& e : j.at("spectrum").at("entries")) {
    r.spectrum.entries.push_back({e.at("root").get<RootVector>(), value_from_json(e.at("coeff")),
                                  e.at("multiplicity").get<int>(),
                                  e.at("kind").get<std::string>() == "V" ? RootKind::vertical : RootKind::horizontal});
  }
  r.spectrum.kernel_dim = j.at("spectrum").at("kernel_dim").get<int>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

Json minimal_set_to_json(const MinimalOrbitSet& s, const SymmetricTriad& t, bool verbose) {
  Json j;
  j["triad"] = t.id.empty() ? t.name : t.id;
  j["face_count"] = s.faces.faces.size();
  j["faces_complete"] = s.faces.complete;
  Json sols = Json::array();
  for (const auto& m : s.solutions) {
    const Face& f = s.faces.faces[m.face_index];
    Json pinned = Json::array();
    for (const auto& p : f.pinned) pinned.push_back({{"root", t.roots[p.root].root}, {"side", side_name(p.side)}});
    sols.push_back({{"face", {{"index", m.face_index}, {"dimension", f.dimension}, {"pinned", pinned}}},
                    {"z", point_to_json(m.z)},
                    {"report", report_to_json(m.report)}});
  }
  j["solutions"] = sols;
  if (verbose) {
    Json diag = Json::array();
    for (const auto& o : s.outcomes) {
      diag.push_back({{"face", o.face_index},
                      {"description", o.face},
                      {"dimension", o.dimension},
                      {"solved", o.solved},
                      {"iterations", o.diagnostics.iterations},
                      {"gradient_norm", o.diagnostics.gradient_norm},
                      {"converged", o.diagnostics.converged},
                      {"degenerate", o.diagnostics.degenerate},
                      {"snapped", o.diagnostics.snapped},
                      {"message", o.diagnostics.message}});
    }
    j["diagnostics"] = diag;
  }
  j["notes"] = s.notes;
  return j;
}

Json table_report_to_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["label"] = row.expected.label;
    jr["expected"] = {{"dim", row.expected.dim},
                      {"classification", row.expected.theorem_label},
                      {"shape", row.expected.shape_label}};
    jr["status"] = row.pass ? "PASS" : "FAIL";
    jr["point_ok"] = row.point_ok;
    jr["dim_ok"] = row.dim_ok;
    jr["classification_ok"] = row.classification_ok;
    if (row.found) {
      jr["found"] = {{"z", point_to_json(*row.found)},
                     {"dim", row.found_dim},
                     {"classification", row.found_theorem},
                     {"shape", row.found_shape}};
    }
    jr["messages"] = row.messages;
    rows.push_back(jr);
  }
  Json extras = Json::array();
  for (const auto& e : r.extras) extras.push_back(report_to_json(e.report));
  return {{"table", r.table}, {"triad", r.triad},     {"solutions", r.solution_count},
          {"passed", r.passed()}, {"rows", rows}, {"extras", extras}};
}

Json prop41_to_json(const std::vector<Prop41Result>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    out.push_back({{"triad", r.triad},
                   {"z", point_to_json(r.z)},
                   {"austere", r.austere},
                   {"totally_geodesic", r.totally_geodesic},
                   {"tag_B", r.tag_B},
                   {"status", r.pass ? "PASS" : "FAIL"}});
  }
  return out;
}

Json examples_to_json(const std::vector<ExampleResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json j{{"example", r.example},
           {"n", r.n},
           {"z", point_to_json(r.z)},
           {"index_collision", r.index_collision},
           {"condition_I", r.condition_I},
           {"minimal", r.minimal},
           {"austere", r.austere},
           {"computed", {{"pi/3", r.computed_pi3}, {"2pi/3", r.computed_2pi3}}}};
    if (r.sets_available) j["displayed"] = {{"pi/3", r.displayed_pi3}, {"2pi/3", r.displayed_2pi3}};
    j["status"] = r.pass ? "PASS" : "FAIL";
    j["messages"] = r.messages;
    out.push_back(j);
  }
  return out;
}

}  // namespace hermann
