// Command-line front end: catalog browsing, point analysis, minimal-orbit
// enumeration, table regression and cell diagrams.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hermann/json_io.hpp"

using namespace hermann;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SymmetricTriad resolve_triad(const std::string& key) {
  if (const SymmetricTriad* t = find_triad(key)) return *t;
  if (std::filesystem::exists(key)) {
    SymmetricTriad t = load_triad_file(key);
    auto problems = validate(t);
    if (!problems.empty()) {
      std::string msg = key + " is not a valid triad:";
      for (const auto& p : problems) msg += "\n  " + p;
      throw UsageError(msg);
    }
    return t;
  }
  throw UsageError("unknown triad \"" + key + "\" (see `triads list`)");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal orbits of commutative Hermann actions"};
  app.require_subcommand(1);

  std::string format = "text";
  double tol = kDefaultTolerance;
  bool parallel = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--parallel", parallel, "Solve faces concurrently");

  auto* triads = app.add_subcommand("triads", "Browse the built-in catalog");
  triads->require_subcommand(1);
  auto* triads_list = triads->add_subcommand("list", "List catalog entries");
  auto* triads_show = triads->add_subcommand("show", "Show one triad");
  std::string show_name;
  triads_show->add_option("name", show_name, "Catalog id, display name or JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "Classify the orbit through one cell point");
  std::string analyze_triad, analyze_z;
  analyze->add_option("triad", analyze_triad, "Catalog id, display name or JSON file")->required();
  analyze->add_option("--z", analyze_z, "Simple-root values, e.g. \"pi/3,-pi/6\"")->required();

  auto* minimal = app.add_subcommand("minimal", "Enumerate all minimal orbits");
  std::string minimal_triad;
  bool verbose = false;
  minimal->add_option("triad", minimal_triad, "Catalog id, display name or JSON file")->required();
  minimal->add_flag("--verbose", verbose, "Print per-face convergence diagnostics");

  auto* verify = app.add_subcommand("verify", "Run the regression checks");
  std::vector<int> tables;
  int examples_n = -1;
  bool prop41 = false, all = false;
  auto* tables_opt = verify->add_option("--tables", tables, "Reproduce Tables 4-14 (or the given one)")->expected(0, 1);
  verify->add_flag("--prop41", prop41, "Check the austere points of the equal-multiplicity actions");
  verify->add_option("--examples", examples_n, "Check the worked examples for n = 0..N")->check(CLI::NonNegativeNumber);
  verify->add_flag("--all", all, "Everything (examples with N = 3)");

  auto* figure = app.add_subcommand("figure", "Write an SVG picture of a rank-two cell");
  std::string figure_triad, figure_out;
  figure->add_option("triad", figure_triad, "Catalog id, display name or JSON file")->required();
  figure->add_option("-o,--output", figure_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const bool json = format == "json";
  EnumerateOptions eopts;
  eopts.tolerance = tol;
  eopts.parallel = parallel;

  try {
    if (*triads_list) {
      if (json) {
        Json arr = Json::array();
        for (const auto& t : catalog()) arr.push_back(triad_to_json(t));
        print(arr);
      } else {
        for (const auto& t : catalog()) std::cout << t.id << "\t" << t.name << "\n";
      }
      return 0;
    }
    if (*triads_show) {
      SymmetricTriad t = resolve_triad(show_name);
      if (json) {
        print(triad_to_json(t));
      } else {
        std::cout << render_text(t);
      }
      return 0;
    }
    if (*analyze) {
      SymmetricTriad t = resolve_triad(analyze_triad);
      CellPoint z = parse_cell_point(analyze_z);
      if (static_cast<int>(z.rank()) != t.rank) {
        throw UsageError("--z has " + std::to_string(z.rank()) + " coordinates but the triad has rank " +
                         std::to_string(t.rank));
      }
      OrbitReport r = classify(t, z, tol);
      if (json) {
        print(report_to_json(r));
      } else {
        std::cout << render_text(r, t);
      }
      return 0;
    }
    if (*minimal) {
      SymmetricTriad t = resolve_triad(minimal_triad);
      MinimalOrbitSet s = enumerate_minimal_orbits(t, eopts);
      if (json) {
        print(minimal_set_to_json(s, t, verbose));
      } else {
        std::cout << render_text(s, t, verbose);
      }
      return 0;
    }
    if (*verify) {
      const bool do_tables = all || tables_opt->count() > 0;
      const bool do_prop = all || prop41;
      const int n_max = all ? std::max(examples_n, 3) : examples_n;
      if (!do_tables && !do_prop && n_max < 0) throw UsageError("verify needs --tables, --prop41, --examples N or --all");
      bool ok = true;
      Json out;
      if (do_tables) {
        Json arr = Json::array();
        std::vector<int> ids;
        if (tables.empty()) {
          for (const auto& t : expected_tables()) ids.push_back(t.id);
        } else {
          ids = tables;
          expected_table(ids.front());
        }
        int rows = 0, passed = 0;
        for (int id : ids) {
          TableReport r = reproduce_table(id, eopts);
          ok = ok && r.all_pass();
          rows += static_cast<int>(r.rows.size());
          passed += r.passed();
          if (json) {
            arr.push_back(table_report_to_json(r));
          } else {
            std::cout << render_text(r) << "\n";
          }
        }
        if (json) {
          out["tables"] = arr;
        } else {
          std::cout << "tables: " << passed << "/" << rows << " rows pass\n\n";
        }
      }
      if (do_prop) {
        auto r = check_proposition_4_1(tol);
        for (const auto& x : r) ok = ok && x.pass;
        if (json) {
          out["prop41"] = prop41_to_json(r);
        } else {
          std::cout << "Proposition 4.1\n" << render_text(r) << "\n";
        }
      }
      if (n_max >= 0) {
        auto r = check_examples(n_max);
        for (const auto& x : r) ok = ok && x.pass;
        if (json) {
          out["examples"] = examples_to_json(r);
        } else {
          std::cout << "Examples 1-4\n" << render_text(r) << "\n";
        }
      }
      if (json) {
        out["status"] = ok ? "PASS" : "FAIL";
        print(out);
      } else {
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
      }
      return ok ? 0 : 1;
    }
    if (*figure) {
      SymmetricTriad t = resolve_triad(figure_triad);
      if (t.rank != 2) throw UsageError("figure needs a rank-two triad");
      MinimalOrbitSet s = enumerate_minimal_orbits(t, eopts);
      std::vector<MarkedPoint> marks;
      for (const auto& m : s.solutions) marks.push_back({m.z, m.z.to_string()});
      std::ofstream f(figure_out);
      if (!f) throw std::runtime_error("cannot write " + figure_out);
      f << emit_cell_svg(t, marks);
      if (!json) std::cout << "wrote " << figure_out << " (" << marks.size() << " points)\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
