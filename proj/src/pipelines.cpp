#include "slnet/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <functional>

#include "json.hpp"

#include "slnet/parallel.hpp"
#include "slnet/shortest_paths.hpp"
#include "slnet/slst.hpp"
#include "slnet/thick_trees.hpp"
#include "slnet/thin_lp.hpp"

namespace slnet {

namespace {

using Clock = std::chrono::steady_clock;

class StageClock {
 public:
  explicit StageClock(RunReport& report) : report_(report), start_(Clock::now()) {}
  void lap(const char* stage) {
    const auto now = Clock::now();
    if (report_.params.record_timings) {
      report_.timings_ms.emplace_back(
          stage, std::chrono::duration<double, std::milli>(now - start_).count());
    }
    start_ = now;
  }

 private:
  RunReport& report_;
  Clock::time_point start_;
};

/// Golden-ratio offset so root sampling and rounding draw from unrelated streams.
constexpr std::uint64_t kRootStream = 0x9E3779B97F4A7C15ull;

std::vector<char> mask_of(const Digraph& g, std::span<const EdgeId> edges) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw Error("edge id " + std::to_string(e) + " out of range");
    mask[e] = 1;
  }
  return mask;
}

void record(Verification& v, NodeId a, NodeId b, double bound, Distance d) {
  const std::optional<double> f = violation_factor(d, bound);
  ++v.total_pairs;
  if (f && *f <= 1.0) ++v.settled_pairs;
  if (v.worst_violation && (!f || *f > *v.worst_violation)) v.worst_violation = f;
  // Compare as d ≤ allowed·bound so exact ties are not lost to division.
  const bool within = d && (*d == 0 || static_cast<double>(*d) <= v.allowed * bound);
  if (!within) {
    v.ok = false;
    v.offending.push_back({a, b, bound, d, f});
  }
}

struct TwoStage {
  std::vector<PairDemand> demands;
  // per root: bounds root→v and v→root
  std::function<TerminalBounds(NodeId)> out_bounds, in_bounds;
};

void run_two_stage(const Digraph& g, const TwoStage& stages, RunReport& report) {
  const SolveParams& p = report.params;
  StageClock clock(report);
  const std::size_t n = g.node_count();

  LpParams lp;
  lp.eps = p.eps_lp();
  lp.max_rounds = p.lp_max_rounds;
  const FractionalSolution frac = solve_fractional(g, stages.demands, lp);
  report.lp_objective = frac.objective;
  report.lp_dual_bound = frac.dual_bound;
  report.lp_rounds = frac.rounds;
  for (const auto& cols : frac.columns) report.lp_columns += cols.size();
  clock.lap("lp");

  report.gamma = rounding_gamma(n);
  report.rounded_edges = round_edges(frac.x, n, p.seed);
  clock.lap("rounding");

  SampleConfig cfg;
  cfg.delta = p.delta;
  cfg.seed = p.seed ^ kRootStream;
  report.roots = sample_roots(n, cfg);
  report.delta = report.roots.size();

  SlstParams sp;
  sp.level = p.level;
  sp.eps1 = p.eps1();
  sp.max_k_prime = p.max_k_prime;
  sp.max_rungs = p.max_rungs;
  std::vector<RootTrees> trees(report.roots.size());
  const std::size_t workers = p.workers == 0 ? worker_count() : p.workers;
  std::vector<std::unique_ptr<RootTreeBuilder>> builders(workers);
  parallel_for(report.roots.size(), workers, [&](std::size_t i, std::size_t w) {
    if (!builders[w]) builders[w] = std::make_unique<RootTreeBuilder>(g, sp);
    const NodeId r = report.roots[i];
    trees[i] = builders[w]->build(r, stages.out_bounds(r), stages.in_bounds(r));
  });
  report.thick_edges = union_thick(trees);
  clock.lap("thick");

  std::vector<EdgeId> all = report.rounded_edges;
  all.insert(all.end(), report.thick_edges.begin(), report.thick_edges.end());
  report.edges = normalize_edge_set(std::move(all));
  report.cost = g.cost_of(report.edges);
}

}  // namespace

std::optional<double> violation_factor(Distance d, double bound) {
  if (!d) return std::nullopt;
  if (*d == 0) return 0.0;
  if (bound <= 0) return std::nullopt;
  return static_cast<double>(*d) / bound;
}

Verification verify_solution(const Instance& inst, std::span<const EdgeId> edges, double allowed) {
  Verification v;
  v.allowed = allowed;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const Digraph& g = x.graph;
        const std::vector<char> mask = mask_of(g, edges);
        if constexpr (std::is_same_v<T, SlstInstance>) {
          const ShortestPathTree spt = shortest_path_tree(g, x.root, mask);
          for (const auto& [t, d] : x.bounds) {
            record(v, x.root, t, static_cast<double>(d), spt.distance[t]);
          }
          // Must be an arborescence: in-degree ≤ 1, nothing enters the root,
          // every edge hangs off the root.
          TreeSolution tree;
          tree.root = x.root;
          tree.edges = normalize_edge_set({edges.begin(), edges.end()});
          tree.cost = g.cost_of(tree.edges);
          for (const auto& [t, d] : x.bounds) {
            if (spt.distance[t]) tree.terminal_distance[t] = *spt.distance[t];
          }
          if (tree.edges.size() != edges.size() || !is_out_arborescence(g, tree)) v.ok = false;
        } else {
          const std::size_t n = g.node_count();
          std::optional<DistanceMatrix> base;
          if constexpr (std::is_same_v<T, SpannerInstance>) base = all_pairs_lengths(g);
          for (NodeId a = 0; a < n; ++a) {
            const std::vector<Distance> dist = shortest_path_tree(g, a, mask).distance;
            for (NodeId b = 0; b < n; ++b) {
              if (a == b) continue;
              if constexpr (std::is_same_v<T, NdbdInstance>) {
                record(v, a, b, static_cast<double>(x.bound), dist[b]);
              } else {
                const Distance ref = (*base)[a][b];
                if (!ref) continue;  // unreachable in G: no constraint
                record(v, a, b, x.stretch.value() * static_cast<double>(*ref), dist[b]);
              }
            }
          }
        }
      },
      inst);
  return v;
}

double guaranteed_factor(const Instance& inst, const SolveParams& params) {
  if (std::holds_alternative<NdbdInstance>(inst)) return 2.0 * (1.0 + params.eps1());
  if (const auto* s = std::get_if<SpannerInstance>(&inst)) {
    return s->stretch.value() * (1.0 + params.eps1());
  }
  return 1.0 + params.eps;
}

std::string describe(const Instance& inst) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        std::string s;
        if constexpr (std::is_same_v<T, NdbdInstance>) s = "ndbd";
        if constexpr (std::is_same_v<T, SpannerInstance>) s = "spanner";
        if constexpr (std::is_same_v<T, SlstInstance>) s = "slst";
        s += " n=" + std::to_string(x.graph.node_count()) + " m=" + std::to_string(x.graph.edge_count());
        if constexpr (std::is_same_v<T, NdbdInstance>) s += " L=" + std::to_string(x.bound);
        if constexpr (std::is_same_v<T, SpannerInstance>) s += " alpha=" + x.stretch.str();
        if constexpr (std::is_same_v<T, SlstInstance>) {
          s += " root=" + std::to_string(x.root + 1) + " terminals=" + std::to_string(x.bounds.size());
        }
        return s;
      },
      inst);
}

RunReport solve_ndbd(const NdbdInstance& inst, const SolveParams& params) {
  if (!check_feasible(inst)) {
    throw InfeasibleInstance("some ordered pair has no path of length ≤ " + std::to_string(inst.bound));
  }
  RunReport report;
  report.kind = "ndbd";
  report.instance = describe(inst);
  report.params = params;
  const Digraph& g = inst.graph;
  const std::size_t n = g.node_count();

  TwoStage stages;
  stages.demands = bounded_pair_demands(g, inst.bound);
  auto all_but = [n, bound = static_cast<double>(inst.bound)](NodeId r) {
    TerminalBounds b;
    for (NodeId v = 0; v < n; ++v) {
      if (v != r) b.emplace_back(v, bound);
    }
    return b;
  };
  stages.out_bounds = all_but;
  stages.in_bounds = all_but;
  run_two_stage(g, stages, report);

  StageClock clock(report);
  report.verification = verify_solution(inst, report.edges, guaranteed_factor(inst, params));
  clock.lap("verify");
  return report;
}

RunReport solve_spanner(const SpannerInstance& inst, const SolveParams& params) {
  RunReport report;
  report.kind = "spanner";
  report.instance = describe(inst);
  report.params = params;
  const Digraph& g = inst.graph;
  const Digraph rev = reverse(g);
  const Rational alpha = inst.stretch;

  TwoStage stages;
  stages.demands = stretch_demands(g, alpha);
  auto bounds_in = [&alpha](const Digraph& h, NodeId r) {
    const std::vector<Distance> dist = shortest_lengths_from(h, r);
    TerminalBounds b;
    for (NodeId v = 0; v < h.node_count(); ++v) {
      if (v != r && dist[v]) b.emplace_back(v, static_cast<double>(alpha.floor_times(*dist[v])));
    }
    return b;
  };
  stages.out_bounds = [&](NodeId r) { return bounds_in(g, r); };
  stages.in_bounds = [&](NodeId r) { return bounds_in(rev, r); };
  run_two_stage(g, stages, report);

  StageClock clock(report);
  report.verification = verify_solution(inst, report.edges, guaranteed_factor(inst, params));
  if (report.verification.worst_violation) {
    report.worst_stretch = *report.verification.worst_violation * alpha.value();
  }
  clock.lap("verify");
  return report;
}

RunReport solve_slst(const SlstInstance& inst, const SolveParams& params, std::size_t k) {
  RunReport report;
  report.kind = "slst";
  report.instance = describe(inst);
  report.params = params;
  report.root = inst.root;
  StageClock clock(report);

  SlstParams sp;
  sp.level = params.level;
  sp.eps1 = params.eps;
  sp.k = k;
  sp.max_k_prime = params.max_k_prime;
  sp.max_rungs = params.max_rungs;
  const auto tree = shallow_light(inst, sp);
  if (!tree) {
    throw InfeasibleInstance("fewer than " + std::to_string(k == 0 ? inst.bounds.size() : k) +
                             " terminals can meet their bounds");
  }
  report.edges = tree->edges;
  report.cost = tree->cost;
  report.terminal_distance = tree->terminal_distance;
  report.terminal_bound = inst.bounds;
  clock.lap("tree");

  // Only the terminals the tree serves are held to their bounds.
  SlstInstance served = inst;
  std::erase_if(served.bounds, [&](const auto& tb) { return !tree->terminal_distance.contains(tb.first); });
  report.verification = verify_solution(served, report.edges, guaranteed_factor(inst, params));
  report.verification.total_pairs = inst.bounds.size();
  clock.lap("verify");
  return report;
}

std::string write_report(const RunReport& r) {
  using Json = nlohmann::ordered_json;
  auto factor = [](const std::optional<double>& f) { return f ? Json(*f) : Json(nullptr); };
  auto distance = [](const Distance& d) { return d ? Json(*d) : Json(nullptr); };

  Json j;
  j["instance"] = r.instance;
  Json params;
  params["eps"] = r.params.eps;
  params["level"] = r.params.level;
  params["seed"] = r.params.seed;
  params["gamma"] = factor(r.gamma);
  params["delta"] = r.delta ? Json(*r.delta) : Json(nullptr);
  if (r.kind == "slst") {
    params["eps1"] = r.params.eps;
  } else {
    params["eps_lp"] = r.params.eps_lp();
    params["eps1"] = r.params.eps1();
  }
  if (r.params.max_k_prime != 0 || r.params.max_rungs != 0) {
    params["max_k_prime"] = r.params.max_k_prime;
    params["max_rungs"] = r.params.max_rungs;
    params["heuristic"] = true;
  }
  j["params"] = params;
  Json edges = Json::array();
  for (EdgeId e : r.edges) edges.push_back(e + 1);
  j["edges"] = edges;
  j["cost"] = r.cost;
  j["max_violation_factor"] = factor(r.verification.worst_violation);
  Json timings = Json::object();
  for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
  j["per_stage_timings_ms"] = timings;
  j["settled_pairs"] = r.verification.settled_pairs;
  j["total_pairs"] = r.verification.total_pairs;

  j["kind"] = r.kind;
  if (r.kind == "spanner") j["max_stretch"] = factor(r.worst_stretch);
  j["verified"] = r.verification.ok;
  j["allowed_violation_factor"] = r.verification.allowed;
  Json offending = Json::array();
  for (const PairViolation& p : r.verification.offending) {
    offending.push_back(Json{{"u", p.u + 1}, {"v", p.v + 1}, {"bound", p.bound},
                             {"distance", distance(p.distance)}, {"factor", factor(p.factor)}});
  }
  j["offending_pairs"] = offending;
  if (r.kind == "slst") {
    j["root"] = *r.root + 1;
    Json terms = Json::array();
    for (const auto& [t, bound] : r.terminal_bound) {
      Distance d;
      if (const auto it = r.terminal_distance.find(t); it != r.terminal_distance.end()) d = it->second;
      terms.push_back(Json{{"terminal", t + 1},
                           {"bound", bound},
                           {"distance", distance(d)},
                           {"factor", factor(violation_factor(d, static_cast<double>(bound)))}});
    }
    j["terminals"] = terms;
  } else {
    auto ids = [](const auto& v) {
      Json a = Json::array();
      for (auto x : v) a.push_back(x + 1);
      return a;
    };
    j["stages"] = Json{{"lp_objective", r.lp_objective},
                       {"lp_dual_bound", r.lp_dual_bound},
                       {"lp_rounds", r.lp_rounds},
                       {"lp_columns", r.lp_columns},
                       {"rounded_edges", ids(r.rounded_edges)},
                       {"thick_edges", ids(r.thick_edges)},
                       {"roots", ids(r.roots)}};
  }
  return j.dump(2) + "\n";
}

}  // namespace slnet
