#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slnet/bench.hpp"
#include "slnet/generator.hpp"
#include "slnet/instance_io.hpp"
#include "slnet/oracle.hpp"
#include "slnet/pipelines.hpp"
#include "slnet/rsp.hpp"
#include "slnet/thick_trees.hpp"
#include "slnet/thin_lp.hpp"

using namespace slnet;
using Json = nlohmann::ordered_json;

namespace {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text), 1);
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error("cannot write " + out);
  file << text;
}

Json ids(const std::vector<EdgeId>& edges) {
  Json a = Json::array();
  for (EdgeId e : edges) a.push_back(e + 1);
  return a;
}

const Digraph& graph_of(const Instance& inst) {
  return std::visit([](const auto& x) -> const Digraph& { return x.graph; }, inst);
}

template <typename T>
const T& expect_kind(const Instance& inst, const char* name) {
  const T* x = std::get_if<T>(&inst);
  if (!x) throw Error(std::string("input is not a ") + name + " instance");
  return *x;
}

NodeId node_arg(std::size_t one_based, const Digraph& g) {
  if (one_based < 1 || one_based > g.node_count()) throw Error("node id out of range");
  return static_cast<NodeId>(one_based - 1);
}

std::vector<PairDemand> read_demands(const std::string& path, const Digraph& g) {
  std::istringstream in(read_file(path));
  std::vector<PairDemand> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::size_t u = 0, v = 0;
    Length bound = 0;
    if (line.empty() || line[0] == 'c') continue;
    if (!(ls >> u >> v >> bound)) throw Error("demand lines are: <u> <v> <bound>");
    out.push_back({node_arg(u, g), node_arg(v, g), bound});
  }
  return out;
}

std::vector<PairDemand> instance_demands(const Instance& inst) {
  if (const auto* x = std::get_if<NdbdInstance>(&inst)) return bounded_pair_demands(x->graph, x->bound);
  if (const auto* x = std::get_if<SpannerInstance>(&inst)) return stretch_demands(x->graph, x->stretch);
  const auto& s = std::get<SlstInstance>(inst);
  std::vector<PairDemand> out;
  for (const auto& [t, d] : s.bounds) out.push_back({s.root, t, d});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shallow-light network design solvers"};
  app.require_subcommand(1);

  std::string input, out = "-";
  std::uint64_t seed = 1;
  double eps = 0.25;
  int level = 2;
  bool timings = false;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  std::string gen_kind;
  GraphShape shape;
  Length gen_bound = 0;
  std::string gen_alpha = "3/2", gen_slack = "3/2";
  std::size_t gen_terminals = 3;
  gen->add_option("kind", gen_kind, "ndbd | slst | spanner")->required()->check(CLI::IsMember({"ndbd", "slst", "spanner"}));
  gen->add_option("--n", shape.n)->required();
  gen->add_option("--m", shape.m)->required();
  gen->add_option("--max-cost", shape.max_cost)->capture_default_str();
  gen->add_option("--max-length", shape.max_length)->capture_default_str();
  gen->add_option("--seed", shape.seed)->capture_default_str();
  gen->add_option("--L", gen_bound, "NDBD distance bound");
  gen->add_option("--alpha", gen_alpha, "spanner stretch p/q")->capture_default_str();
  gen->add_option("--terminals", gen_terminals, "SLST terminal count")->capture_default_str();
  gen->add_option("--slack", gen_slack, "SLST bound multiplier p/q ≥ 1")->capture_default_str();
  gen->add_option("--out", out);

  // rsp
  auto* rsp = app.add_subcommand("rsp", "Restricted shortest path query");
  std::size_t from = 0, to = 0;
  Length bound = 0;
  bool exact = false;
  rsp->add_option("--input", input)->required();
  rsp->add_option("--from", from)->required();
  rsp->add_option("--to", to)->required();
  rsp->add_option("--bound", bound)->required();
  rsp->add_option("--eps", eps)->capture_default_str();
  rsp->add_flag("--exact", exact, "exact pseudo-polynomial DP");

  // solvers
  std::size_t k = 0, delta = 0, max_k_prime = 0, max_rungs = 0;
  auto solver_options = [&](CLI::App* sub) {
    sub->add_option("--input", input)->required();
    sub->add_option("--eps", eps)->capture_default_str();
    sub->add_option("--level", level)->capture_default_str();
    sub->add_option("--seed", seed)->capture_default_str();
    sub->add_option("--out", out);
    sub->add_option("--max-k-prime", max_k_prime, "heuristic cap on k' (0 = off)");
    sub->add_option("--max-rungs", max_rungs, "heuristic cap on ladder rungs (0 = off)");
    sub->add_flag("--timings", timings, "record per-stage wall-clock times");
  };
  auto* solve_slst_cmd = app.add_subcommand("solve-slst", "Shallow-light Steiner tree");
  solver_options(solve_slst_cmd);
  solve_slst_cmd->add_option("--k", k, "terminals to cover (0 = all)");
  auto* solve_ndbd_cmd = app.add_subcommand("solve-ndbd", "Network design with a distance bound");
  solver_options(solve_ndbd_cmd);
  solve_ndbd_cmd->add_option("--delta", delta, "sampled roots (0 = default)");
  auto* solve_spanner_cmd = app.add_subcommand("solve-spanner", "Light-weight directed spanner");
  solver_options(solve_spanner_cmd);
  solve_spanner_cmd->add_option("--delta", delta, "sampled roots (0 = default)");

  // lp
  auto* lp_cmd = app.add_subcommand("lp", "Fractional path LP");
  std::string demands = "all";
  lp_cmd->add_option("--input", input)->required();
  lp_cmd->add_option("--eps", eps)->capture_default_str();
  lp_cmd->add_option("--demands", demands, "all | file of '<u> <v> <bound>' lines")->capture_default_str();

  // classify
  auto* classify = app.add_subcommand("classify", "Thin/thick pair diagnostic");
  classify->add_option("--input", input)->required();
  classify->add_option("--bound", bound)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact brute-force optimum for tiny instances");
  std::string problem;
  oracle->add_option("--input", input)->required();
  oracle->add_option("--problem", problem)->required()->check(CLI::IsMember({"ndbd", "slst", "spanner"}));
  oracle->add_option("--k", k, "SLST terminals to cover (0 = all)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a solution against its instance");
  std::string report_path;
  double factor = 0;
  verify->add_option("--input", input)->required();
  verify->add_option("--report", report_path, "JSON report with an `edges` array")->required();
  verify->add_option("--factor", factor, "admissible violation (default: the solver's guarantee)");

  // bench
  auto* bench = app.add_subcommand("bench", "Solver vs oracle table over a seeded family");
  std::string config_path, csv_out = "-", json_out;
  bench->add_option("--config", config_path)->required();
  bench->add_option("--csv", csv_out)->capture_default_str();
  bench->add_option("--json", json_out);
  bench->add_flag("--timings", timings, "fill runtime_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  SolveParams params;
  params.eps = eps;
  params.level = level;
  params.seed = seed;
  params.delta = delta;
  params.max_k_prime = max_k_prime;
  params.max_rungs = max_rungs;
  params.record_timings = timings;

  try {
    if (gen->parsed()) {
      Instance inst;
      if (gen_kind == "ndbd") {
        inst = generate_ndbd(shape, gen_bound);
      } else if (gen_kind == "spanner") {
        inst = generate_spanner(shape, parse_rational(gen_alpha));
      } else {
        inst = generate_slst(shape, gen_terminals, parse_rational(gen_slack));
      }
      emit(write_instance(inst), out);
      return 0;
    }
    if (bench->parsed()) {
      BenchConfig config = parse_bench_config(read_file(config_path));
      config.timings = config.timings || timings;
      const auto rows = run_bench(config);
      emit(bench_csv(rows), csv_out);
      if (!json_out.empty()) emit(bench_json(config, rows), json_out);
      return 0;
    }

    const Instance inst = read_instance_file(input);
    const Digraph& g = graph_of(inst);

    if (rsp->parsed()) {
      const NodeId u = node_arg(from, g), v = node_arg(to, g);
      const auto p = exact ? rsp_exact(g, u, v, bound) : min_cost_path_relaxed(g, u, v, bound, eps);
      Json j;
      if (p) {
        j = Json{{"cost", p->cost}, {"length", p->length}, {"edges", ids(p->edges)}};
      } else {
        j = Json{{"cost", nullptr}, {"length", nullptr}, {"edges", Json::array()}};
      }
      std::cout << j.dump(2) << "\n";
      return p ? 0 : 1;
    }
    if (solve_slst_cmd->parsed() || solve_ndbd_cmd->parsed() || solve_spanner_cmd->parsed()) {
      RunReport report;
      if (solve_slst_cmd->parsed()) {
        report = solve_slst(expect_kind<SlstInstance>(inst, "slst"), params, k);
      } else if (solve_ndbd_cmd->parsed()) {
        report = solve_ndbd(expect_kind<NdbdInstance>(inst, "ndbd"), params);
      } else {
        report = solve_spanner(expect_kind<SpannerInstance>(inst, "spanner"), params);
      }
      emit(write_report(report), out);
      return report.verification.ok ? 0 : 1;
    }
    if (lp_cmd->parsed()) {
      const auto dem = demands == "all" ? instance_demands(inst) : read_demands(demands, g);
      LpParams lp;
      lp.eps = eps;
      const FractionalSolution s = solve_fractional(g, dem, lp);
      Json nonzero = Json::array();
      for (EdgeId e = 0; e < s.x.size(); ++e) {
        if (s.x[e] > lp.tolerance) nonzero.push_back(Json{{"edge", e + 1}, {"x", s.x[e]}});
      }
      std::size_t columns = 0;
      for (const auto& c : s.columns) columns += c.size();
      const Json j{{"objective", s.objective},
                   {"dual_bound", s.dual_bound},
                   {"rounds", s.rounds},
                   {"demands", dem.size()},
                   {"nonzero_x", nonzero},
                   {"columns_count", columns}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (classify->parsed()) {
      const auto c = classify_pairs_diagnostic(g, bound);
      Json pairs = Json::array();
      for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
          if (u == v) continue;
          pairs.push_back(Json{{"u", u + 1}, {"v", v + 1}, {"kind", to_string(c[u][v].kind)},
                               {"witnesses", c[u][v].witness_nodes}});
        }
      }
      std::cout << Json{{"bound", bound}, {"pairs", pairs}}.dump(2) << "\n";
      return 0;
    }
    if (oracle->parsed()) {
      Json j;
      if (problem == "slst") {
        const auto& s = expect_kind<SlstInstance>(inst, "slst");
        const auto t = exact_dslst(s, k == 0 ? s.bounds.size() : k);
        j = t ? Json{{"cost", t->cost}, {"edges", ids(t->edges)}} : Json{{"cost", nullptr}, {"edges", Json::array()}};
      } else if (problem == "ndbd") {
        const auto h = exact_ndbd(expect_kind<NdbdInstance>(inst, "ndbd"));
        j = h ? Json{{"cost", h->cost}, {"edges", ids(h->edges)}} : Json{{"cost", nullptr}, {"edges", Json::array()}};
      } else {
        const auto h = exact_spanner(expect_kind<SpannerInstance>(inst, "spanner"));
        j = Json{{"cost", h.cost}, {"edges", ids(h.edges)}};
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (verify->parsed()) {
      const Json report = Json::parse(read_file(report_path));
      std::vector<EdgeId> edges;
      for (const auto& e : report.at("edges")) {
        const auto id = e.get<std::int64_t>();
        if (id < 1 || static_cast<std::size_t>(id) > g.edge_count()) throw Error("edge id out of range");
        edges.push_back(static_cast<EdgeId>(id - 1));
      }
      if (report.contains("params")) params.eps = report["params"].value("eps", params.eps);
      const double allowed = factor > 0 ? factor : guaranteed_factor(inst, params);
      const Verification v = verify_solution(inst, edges, allowed);
      Json offending = Json::array();
      for (const PairViolation& p : v.offending) {
        offending.push_back(Json{{"u", p.u + 1}, {"v", p.v + 1}, {"bound", p.bound},
                                 {"distance", p.distance ? Json(*p.distance) : Json(nullptr)}});
      }
      const Json j{{"ok", v.ok},
                   {"allowed_violation_factor", v.allowed},
                   {"max_violation_factor", v.worst_violation ? Json(*v.worst_violation) : Json(nullptr)},
                   {"settled_pairs", v.settled_pairs},
                   {"total_pairs", v.total_pairs},
                   {"offending_pairs", offending}};
      std::cout << j.dump(2) << "\n";
      return v.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "slnet: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
