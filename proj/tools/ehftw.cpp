#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ehftw/connectifier.hpp"
#include "ehftw/corpus.hpp"
#include "ehftw/decomposer.hpp"
#include "ehftw/errors.hpp"
#include "ehftw/io.hpp"
#include "ehftw/lean.hpp"
#include "ehftw/nonhub.hpp"
#include "ehftw/patterns.hpp"
#include "ehftw/pmc.hpp"
#include "ehftw/separators.hpp"
#include "ehftw/suite.hpp"
#include "ehftw/td_dp.hpp"

using namespace ehftw;
using io::Json;

namespace {

void emit(const Json& j, const std::string& out) {
  if (out.empty()) std::cout << j.dump(2) << '\n';
  else io::write_json(out, j);
}

VertexSet parse_set(const std::string& s) {
  std::vector<Vertex> v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not a vertex list: '" + s + "'");
    }
  }
  return make_set(v);
}

Json opt_witness(const std::optional<PatternWitness>& w) { return w ? io::to_json(*w) : Json(nullptr); }

Json sets_json(const std::vector<VertexSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(s);
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ehftw: structure and treewidth tools for even-hole-free graph classes"};
  app.require_subcommand(1);
  std::string graph_path, td_path, out, params_path, trace_path;

  auto* detect = app.add_subcommand("detect", "class membership, obstructions and hubs");
  int t = 4, k = 1;
  detect->add_option("graph", graph_path, "graph6 file")->required();
  detect->add_option("--t", t, "clique bound")->check(CLI::PositiveNumber);
  detect->add_option("--k", k, "generalized pyramid order")->check(CLI::PositiveNumber);
  detect->add_option("--out", out, "write JSON here");

  auto* seps = app.add_subcommand("separators", "minimal, clique, star and balanced separators");
  double balance = 0.5;
  int max_size = 3;
  seps->add_option("graph", graph_path)->required();
  seps->add_option("--balance", balance, "component size bound as a fraction of n")->check(CLI::Range(0.0, 1.0));
  seps->add_option("--max-size", max_size, "largest balanced separator searched")->check(CLI::NonNegativeNumber);
  seps->add_option("--out", out);

  auto* refine = app.add_subcommand("refine", "refine to a k-lean, tight decomposition");
  int lean_k = 3;
  refine->add_option("graph", graph_path)->required();
  refine->add_option("--k", lean_k)->check(CLI::Range(1, 4));
  refine->add_option("--td", td_path, "seed decomposition (TD JSON)");
  refine->add_option("--out", out);

  auto* dec = app.add_subcommand("decompose", "tree decomposition by hub-partition recursion");
  dec->add_option("graph", graph_path)->required();
  dec->add_option("--params", params_path, "params JSON");
  dec->add_option("--trace", trace_path, "write the recursion trace here");
  dec->add_option("--out", out, "write the TD JSON here");

  auto* solve_cmd = app.add_subcommand("solve", "optimise over a tree decomposition");
  std::string problem = "stable-set";
  int r = 0;
  solve_cmd->add_option("graph", graph_path)->required();
  solve_cmd->add_option("--problem", problem, "stable-set, vertex-cover, dominating-set, r-coloring, coloring");
  solve_cmd->add_option("--td", td_path, "TD JSON (default: greedy decomposition)");
  solve_cmd->add_option("--r", r, "colours for r-coloring")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "check a decomposition or a witness");
  std::string witness_path;
  verify->add_option("graph", graph_path)->required();
  verify->add_option("--td", td_path);
  verify->add_option("--witness", witness_path, "witness JSON");
  verify->add_option("--lean", lean_k, "also check k-leanness")->check(CLI::Range(1, 4));
  verify->add_option("--out", out);

  auto* bounds = app.add_subcommand("bounds", "non-hub stable set bounds and component covers");
  int tau = 2;
  bounds->add_option("graph", graph_path)->required();
  bounds->add_option("--td", td_path, "TD JSON (default: greedy decomposition)");
  bounds->add_option("--tau", tau)->check(CLI::PositiveNumber);
  bounds->add_option("--out", out);

  auto* conn = app.add_subcommand("connectify", "path or connectifier attaching members of S");
  std::string s_list;
  int h_target = 3;
  conn->add_option("graph", graph_path)->required();
  conn->add_option("--s", s_list, "comma-separated vertex list")->required();
  conn->add_option("--count", h_target, "members of S to attach")->check(CLI::PositiveNumber);
  conn->add_option("--out", out);

  auto* corpus_cmd = app.add_subcommand("corpus", "generate a filtered graph corpus");
  std::string family = "random-filtered", bucket = "C";
  CorpusSpec spec;
  corpus_cmd->add_option("--family", family, "chordal, tree, clique-glued, random-filtered");
  corpus_cmd->add_option("--bucket", bucket, "C, C_t or C_tt");
  corpus_cmd->add_option("--n-min", spec.n_min)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--n-max", spec.n_max)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--count", spec.count)->check(CLI::NonNegativeNumber);
  corpus_cmd->add_option("--seed", spec.seed);
  corpus_cmd->add_option("--t", spec.t)->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--out", out, "graph6 output file")->required();
  std::string log_path;
  corpus_cmd->add_option("--log", log_path, "membership report JSON");

  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  std::string config_path, json_path;
  suite->add_option("--config", config_path, "suite config JSON");
  suite->add_option("--json", json_path, "write the machine-readable report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*detect) {
      const Graph g = io::read_graph(graph_path);
      const auto rep = class_membership(g, t);
      Json j = io::to_json(rep);
      j["n"] = g.order();
      j["hubs"] = hubs(g);
      j["patterns"] = {{"hole", opt_witness(find_hole(g))},
                       {"even_hole", opt_witness(find_hole(g, Parity::Even))},
                       {"theta", opt_witness(find_theta(g))},
                       {"prism", opt_witness(find_prism(g))},
                       {"pyramid", opt_witness(find_pyramid(g))},
                       {"even_wheel", opt_witness(find_even_wheel(g))},
                       {"generalized_pyramid", opt_witness(find_generalized_k_pyramid(g, k))}};
      emit(j, out);
    } else if (*seps) {
      const Graph g = io::read_graph(graph_path);
      Json j{{"minimal", sets_json(minimal_separators(g))}};
      auto cc = clique_cutset(g);
      j["clique_cutset"] = cc ? Json(*cc) : Json(nullptr);
      if (auto sc = star_cutset(g)) j["star_cutset"] = {{"center", sc->center}, {"set", sc->set}};
      else j["star_cutset"] = nullptr;
      auto bs = balanced_separator(g, balance, max_size);
      j["balanced"] = {{"separator", bs.separator ? Json(*bs.separator) : Json(nullptr)},
                       {"exhaustive", bs.exhaustive},
                       {"balance", balance},
                       {"max_size", max_size}};
      emit(j, out);
    } else if (*refine) {
      const Graph g = io::read_graph(graph_path);
      std::optional<TreeDecomposition> seed;
      if (!td_path.empty()) seed = io::read_td(td_path);
      auto res = refine_to_lean_traced(g, lean_k, seed);
      Json steps = Json::array();
      for (const auto& s : res.steps)
        steps.push_back({{"kind", s.kind}, {"before", s.before.to_string()}, {"after", s.after.to_string()}});
      Json j = io::to_json(res.td);
      j["width"] = width(res.td);
      j["adhesion"] = adhesion(res.td);
      j["steps"] = steps;
      emit(j, out);
    } else if (*dec) {
      const Graph g = io::read_graph(graph_path);
      Params p = params_path.empty() ? Params{} : io::read_params(params_path);
      auto res = decompose(g, p);
      Json full = io::to_json(res);
      if (!trace_path.empty()) io::write_json(trace_path, full["trace"]);
      Json j = io::to_json(res.td);
      j["width"] = res.width;
      j["hub_order"] = res.hub_order;
      j["formula"] = res.formula;
      emit(j, out);
    } else if (*solve_cmd) {
      const Graph g = io::read_graph(graph_path);
      const TreeDecomposition td = td_path.empty() ? greedy_decomposition(g) : io::read_td(td_path);
      emit(io::to_json(solve(g, td, problem_from_string(problem), r)), out);
    } else if (*verify) {
      const Graph g = io::read_graph(graph_path);
      if (td_path.empty() == witness_path.empty()) throw InputError("verify needs exactly one of --td and --witness");
      Json j;
      bool ok = true;
      if (!td_path.empty()) {
        const auto td = io::read_td(td_path);
        const auto rep = validate(g, td);
        j = io::to_json(rep);
        ok = rep.valid();
        if (ok) {
          j["width"] = width(td);
          j["adhesion"] = adhesion(td);
          j["tight"] = is_tight(g, td).tight;
          if (verify->count("--lean")) j["lean"] = is_k_lean(g, td, lean_k).lean;
        }
      } else {
        const auto w = io::witness_from_json(io::read_json(witness_path));
        ok = verify_witness(g, w);
        j = {{"witness", io::to_json(w)}, {"valid", ok}};
      }
      emit(j, out);
      return ok ? 0 : 1;
    } else if (*bounds) {
      const Graph g = io::read_graph(graph_path);
      const TreeDecomposition td = td_path.empty() ? greedy_decomposition(g) : io::read_td(td_path);
      Json j = io::to_json(check_nonhub_bounds(g, td, tau));
      const auto st = to_structured(g, td);
      const auto hub = hubs(g);
      int max_cover = 0;
      for (int node = 0; node < st.node_count(); ++node)
        for (const auto& y : maximal_stable_sets(g, set_difference(st.bag(node), hub)))
          max_cover = std::max<int>(max_cover, cover_by_components(g, st, node, y).components.size());
      j["max_cover_components"] = max_cover;
      emit(j, out);
    } else if (*conn) {
      const Graph g = io::read_graph(graph_path);
      auto c = find_connectifier(g, parse_set(s_list), h_target);
      Json j = c ? io::to_json(*c) : Json(nullptr);
      if (c) j["verified"] = verify_connectifier(g, *c);
      emit(Json{{"connectifier", j}}, out);
    } else if (*corpus_cmd) {
      spec.family = family_from_string(family);
      spec.bucket = bucket_from_string(bucket);
      auto entries = generate_corpus(spec);
      std::vector<Graph> graphs;
      Json log = Json::array();
      for (const auto& e : entries) {
        graphs.push_back(e.g);
        Json m = io::to_json(e.membership);
        m["name"] = e.name;
        m["graph6"] = io::to_graph6(e.g);
        m["bucket"] = to_string(e.bucket);
        log.push_back(m);
      }
      io::write_graph6_file(out, graphs);
      if (!log_path.empty()) io::write_json(log_path, log);
      std::cerr << entries.size() << " graphs written to " << out << '\n';
    } else if (*suite) {
      SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : suite_config_from_json(io::read_json(config_path));
      auto report = run_suite(cfg, [](const CriterionResult& c) { std::cout << summary_line(c) << std::endl; });
      if (!json_path.empty()) io::write_json(json_path, to_json(report));
      std::cout << (report.passed() ? "suite passed" : "suite FAILED") << '\n';
      return report.passed() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const ClassViolation& e) {
    std::cerr << "class violation: " << e.what() << '\n';
    if (e.witness()) std::cerr << io::to_json(*e.witness()).dump() << '\n';
    return 3;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
