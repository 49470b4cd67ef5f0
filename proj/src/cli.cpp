#include "pe/cli.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "pe/classify.hpp"
#include "pe/extension.hpp"
#include "pe/json_io.hpp"
#include "pe/retract.hpp"
#include "pe/skew_brace.hpp"

namespace pe {
namespace {

using nlohmann::json;

void print_grid(std::ostream& out, const std::string& name, int n,
                const std::vector<int>& flat) {
  const int w = (int)std::to_string(n > 1 ? n - 1 : 1).size();
  out << name << ":\n";
  for (int i = 0; i < n; ++i) {
    out << " ";
    for (int j = 0; j < n; ++j) out << ' ' << std::setw(w) << flat[i * n + j];
    out << '\n';
  }
}

void print_solution(std::ostream& out, const SolutionTable& s) {
  out << "n = " << s.n << '\n';
  print_grid(out, "mult", s.n, s.mult);
  print_grid(out, "theta", s.n, s.theta);
}

std::string perm_str(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

void print_matched_pair(std::ostream& out, const MatchedPair& mp) {
  out << "A = " << group_name(mp.A) << '\n';
  print_grid(out, "A.table", mp.A.order, mp.A.product);
  out << "G = " << group_name(mp.G) << '\n';
  print_grid(out, "G.table", mp.G.order, mp.G.product);
  out << "sigma:\n";
  for (int a = 0; a < mp.A.order; ++a)
    out << "  a=" << a << ": " << perm_str(mp.sigma.act[a]) << '\n';
  out << "delta:\n";
  for (int x = 0; x < mp.G.order; ++x)
    out << "  x=" << x << ": " << perm_str(mp.delta.act[x]) << '\n';
}

// Compact one-token action description for the classify listing: "triv"
// when every row is the identity, otherwise the rows joined with ';'.
std::string action_desc(const std::vector<Perm>& rows) {
  bool triv = true;
  for (const Perm& p : rows) triv = triv && is_identity(p);
  if (triv) return "triv";
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ';';
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      if (k) s += ',';
      s += std::to_string(rows[i][k]);
    }
  }
  return s;
}

// Writes `j` to out_path when given, otherwise dumps it to the stream;
// table format prints the human-readable form instead of the dump.
int emit(const json& j, const std::string& out_path, const std::string& format,
         std::ostream& out, const std::function<void(std::ostream&)>& table) {
  if (!out_path.empty()) save_json_file(out_path, j);
  if (format == "table")
    table(out);
  else if (out_path.empty())
    out << j.dump(2) << '\n';
  return 0;
}

// Groups oracle tables into isomorphism classes by pure search, without
// touching the classification pipeline.
std::vector<std::vector<int>> oracle_classes(
    const std::vector<SolutionTable>& all) {
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < (int)all.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes)
      if (solution_iso_search(all[cls[0]], all[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"pentagon equation toolkit: verify, build, split and classify "
               "finite bijective solutions"};
  app.require_subcommand(1);

  std::string in_a, in_b, out_path, format = "json", catalog_path;
  std::string mp_path, ext_path;
  int order = 0, x_size = 1;
  bool involutive = false, with_oracle = false, kashaev = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", out_path, "write the JSON result to this file");
  };

  auto* c_verify = app.add_subcommand(
      "verify", "check the pentagon identity on a solution file");
  c_verify->add_option("file", in_a, "solution JSON")->required();
  c_verify->add_flag("--kashaev", kashaev,
                     "report the first failing componentwise law instead of "
                     "the raw triple");

  auto* c_construct = app.add_subcommand(
      "construct", "build a solution from a matched pair or extension datum");
  c_construct->add_option("--matched-pair", mp_path, "matched pair JSON");
  c_construct->add_option("--extension", ext_path, "extension JSON");
  c_construct->add_option("--x-size", x_size,
                          "fiber size (with --matched-pair; identity phi)")
      ->check(CLI::PositiveNumber);
  add_format(c_construct);

  auto* c_retract = app.add_subcommand(
      "retract", "quotient a solution by its theta-kernel congruence");
  c_retract->add_option("file", in_a, "solution JSON")->required();
  add_format(c_retract);

  auto* c_extract = app.add_subcommand(
      "extract", "recover the matched pair of an irretractable solution");
  c_extract->add_option("file", in_a, "solution JSON")->required();
  add_format(c_extract);

  auto* c_decompose = app.add_subcommand(
      "decompose", "split a solution into fiber, matched pair and phi");
  c_decompose->add_option("file", in_a, "solution JSON")->required();
  add_format(c_decompose);

  auto* c_classify = app.add_subcommand(
      "classify", "list the isomorphism classes of solutions of one order");
  c_classify->add_option("--order", order, "carrier size")
      ->required()
      ->check(CLI::PositiveNumber);
  c_classify->add_flag("--involutive", involutive,
                       "restrict to involutive classes");
  c_classify->add_flag("--oracle", with_oracle,
                       "cross-check against the exhaustive scan (order <= 3)");
  c_classify->add_option("--catalog", catalog_path,
                         "catalog file (default pe_classes_<n>.json)");

  auto* c_iso = app.add_subcommand(
      "iso", "search for an isomorphism between two solution files");
  c_iso->add_option("a", in_a, "solution JSON")->required();
  c_iso->add_option("b", in_b, "solution JSON")->required();

  auto* c_brace = app.add_subcommand(
      "from-brace", "build the solution attached to a skew brace");
  c_brace->add_option("file", in_a, "brace JSON")->required();
  add_format(c_brace);

  auto* c_oracle = app.add_subcommand(
      "oracle", "exhaustively list all solutions of one order (<= 3)");
  c_oracle->add_option("--order", order, "carrier size")
      ->required()
      ->check(CLI::PositiveNumber);
  c_oracle->add_option("--out", out_path, "write the full list to this file");

  std::vector<const char*> argv;
  argv.push_back("pesolve");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (c_verify->parsed()) {
      SolutionTable s = solution_from_json(load_json_file(in_a), in_a);
      if (kashaev) {
        if (auto f = verify_kashaev(s)) {
          out << "FAIL " << law_name(f->law) << " at (" << f->triple[0] << ","
              << f->triple[1] << "," << f->triple[2] << ")\n";
          return 1;
        }
      } else if (auto f = verify_pe(s)) {
        out << "FAIL pentagon at (" << f->triple[0] << "," << f->triple[1]
            << "," << f->triple[2] << ")\n";
        return 1;
      }
      out << "OK pentagon holds on " << s.n << " points; bijective="
          << (is_bijective_solution(s) ? "yes" : "no") << "\n";
      return 0;
    }

    if (c_construct->parsed()) {
      if (mp_path.empty() == ext_path.empty())
        throw RangeError("construct: give exactly one of --matched-pair and "
                         "--extension");
      SolutionTable s;
      if (!ext_path.empty()) {
        s = build_extension(
            extension_from_json(load_json_file(ext_path), ext_path));
      } else {
        MatchedPair mp =
            matched_pair_from_json(load_json_file(mp_path), mp_path);
        ExtensionSpec spec{mp, x_size,
                           std::vector<Perm>(mp.A.order, identity_perm(x_size))};
        s = x_size == 1 ? construct_solution(mp) : build_extension(spec);
      }
      return emit(solution_to_json(s), out_path, format, out,
                  [&](std::ostream& o) { print_solution(o, s); });
    }

    if (c_retract->parsed()) {
      SolutionTable s = solution_from_json(load_json_file(in_a), in_a);
      RetractResult r = retract_solution(s);
      json j{{"quotient", solution_to_json(r.quotient)},
             {"classOf", r.class_of},
             {"sectionRep", r.section_rep}};
      return emit(j, out_path, format, out, [&](std::ostream& o) {
        print_solution(o, r.quotient);
        o << "classOf: " << perm_str(r.class_of) << '\n';
      });
    }

    if (c_extract->parsed()) {
      SolutionTable s = solution_from_json(load_json_file(in_a), in_a);
      ExtractedPair ex = extract_matched_pair(s);
      json j{{"mp", matched_pair_to_json(ex.mp)}, {"labeling", ex.labeling}};
      return emit(j, out_path, format, out, [&](std::ostream& o) {
        print_matched_pair(o, ex.mp);
        o << "labeling: " << perm_str(ex.labeling) << '\n';
      });
    }

    if (c_decompose->parsed()) {
      SolutionTable s = solution_from_json(load_json_file(in_a), in_a);
      Decomposition d = decompose_solution(s);
      json j{{"extension", extension_to_json(d.spec)},
             {"labeling", d.labeling}};
      return emit(j, out_path, format, out, [&](std::ostream& o) {
        o << "xSize = " << d.spec.x_size << '\n';
        print_matched_pair(o, d.spec.mp);
        o << "phi:\n";
        for (int a = 0; a < d.spec.mp.A.order; ++a)
          o << "  a=" << a << ": " << perm_str(d.spec.phi[a]) << '\n';
        o << "labeling: " << perm_str(d.labeling) << '\n';
      });
    }

    if (c_classify->parsed()) {
      auto classes =
          involutive ? classify_involutive(order) : classify_order(order);
      json catalog = json::array();
      for (const auto& c : classes) {
        out << "n=" << order << " x=" << c.desc.x_size
            << " A=" << group_name(c.mp.A) << " G=" << group_name(c.mp.G)
            << " sigma=" << action_desc(c.mp.sigma.act)
            << " delta=" << action_desc(c.mp.delta.act) << '\n';
        catalog.push_back(json{{"n", order},
                               {"xSize", c.desc.x_size},
                               {"A", group_name(c.mp.A)},
                               {"G", group_name(c.mp.G)},
                               {"mp", matched_pair_to_json(c.mp)},
                               {"representative",
                                solution_to_json(c.representative)}});
      }
      out << classes.size() << (classes.size() == 1 ? " class\n" : " classes\n");
      if (catalog_path.empty())
        catalog_path = "pe_classes_" + std::to_string(order) + ".json";
      save_json_file(catalog_path, catalog);

      if (with_oracle) {
        auto all = brute_force_solutions(order);  // RangeError when order > 3
        auto groups = oracle_classes(all);
        if (groups.size() != classes.size() && !involutive) {
          err << "oracle mismatch: scan found " << groups.size()
              << " classes, classification lists " << classes.size() << '\n';
          return 2;
        }
        std::vector<char> used(classes.size(), 0);
        for (const auto& g : groups) {
          int hit = -1;
          for (int k = 0; k < (int)classes.size(); ++k)
            if (!used[k] &&
                solution_iso_search(all[g[0]], classes[k].representative)) {
              hit = k;
              break;
            }
          if (hit < 0) {
            err << "oracle mismatch: a scanned class matches no listed class\n";
            return 2;
          }
          used[hit] = 1;
        }
        out << "oracle: " << all.size() << " tables in " << groups.size()
            << " classes, all matched\n";
      }
      return 0;
    }

    if (c_iso->parsed()) {
      SolutionTable a = solution_from_json(load_json_file(in_a), in_a);
      SolutionTable b = solution_from_json(load_json_file(in_b), in_b);
      if (auto f = solution_iso(a, b)) {
        out << "iso: " << perm_str(*f) << '\n';
        return 0;
      }
      out << "not isomorphic\n";
      return 1;
    }

    if (c_brace->parsed()) {
      SkewBraceTable b = brace_from_json(load_json_file(in_a), in_a);
      SolutionTable s = brace_to_solution(b);
      return emit(solution_to_json(s), out_path, format, out,
                  [&](std::ostream& o) { print_solution(o, s); });
    }

    if (c_oracle->parsed()) {
      auto all = brute_force_solutions(order);
      auto groups = oracle_classes(all);
      out << "n=" << order << " tables=" << all.size()
          << " classes=" << groups.size() << '\n';
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const SolutionTable& rep = all[groups[i][0]];
        out << "class=" << i << " count=" << groups[i].size()
            << " mult=" << json(rep.mult).dump()
            << " theta=" << json(rep.theta).dump() << '\n';
      }
      if (!out_path.empty()) {
        json j{{"n", order}, {"solutions", json::array()},
               {"classes", groups}};
        for (const auto& s : all) j["solutions"].push_back(solution_to_json(s));
        save_json_file(out_path, j);
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return 4;
  } catch (const AxiomError& e) {
    err << "axiom violation: " << e.what() << '\n';
    return 5;
  }
  return 3;  // unreachable: require_subcommand guarantees a branch
}

}  // namespace pe
