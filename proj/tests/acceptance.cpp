// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any gating criterion fails. `acceptance 3 6` runs a subset; -v prints
// per-run progress to stderr. The lines are also written to
// acceptance_report.txt in the working directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slnet/bench.hpp"
#include "slnet/generator.hpp"
#include "slnet/oracle.hpp"
#include "slnet/pipelines.hpp"
#include "slnet/rsp.hpp"
#include "slnet/shortest_paths.hpp"
#include "slnet/slst.hpp"
#include "slnet/thin_lp.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace slnet {
namespace {

using Clock = std::chrono::steady_clock;

bool verbose = false;

/// Per-run progress on stderr under -v.
void progress(const char* pattern, auto... args) {
  if (!verbose) return;
  std::fprintf(stderr, pattern, args...);
  std::fputc('\n', stderr);
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

/// eps as an exact fraction, so ⌈(1+eps)·D⌉ is computed without rounding.
struct Frac {
  std::uint64_t num;
  std::uint64_t den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// d ≤ (1+f)·bound, exactly.
bool within(Length d, Frac f, Length bound) { return d * f.den <= (f.den + f.num) * bound; }

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Length diameter(const Digraph& g) {
  Length out = 0;
  for (const auto& row : all_pairs_lengths(g)) {
    for (const Distance& d : row) {
      if (d) out = std::max(out, *d);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Restricted shortest path variants against the exact DP and enumeration.

Outcome rsp_dominance() {
  constexpr Frac kEps[] = {{1, 10}, {1, 4}, {1, 2}, {1, 1}};
  constexpr std::size_t kGraphs = 200, kQueries = 6;
  Outcome out;
  Rng rng(0xAC1);
  std::size_t queries = 0, feasible = 0, strictly_cheaper = 0;
  for (std::size_t gi = 0; gi < kGraphs; ++gi) {
    const std::size_t n = rng.uniform(2, 12);
    const std::size_t m = rng.uniform(1, 30);
    const Digraph g = testing::random_digraph(rng, n, m, 50, 10);
    for (std::size_t q = 0; q < kQueries; ++q) {
      const NodeId u = static_cast<NodeId>(rng.uniform(0, n - 1));
      NodeId v = static_cast<NodeId>(rng.uniform(0, n - 2));
      if (v >= u) ++v;
      const Length bound = rng.uniform(0, 40);
      const Frac eps = kEps[rng.uniform(0, 3)];
      const std::string where = fmt("graph %zu query %zu", gi, q);
      ++queries;

      const auto exact = rsp_exact(g, u, v, bound);
      const auto brute = testing::brute_force_rsp(g, u, v, static_cast<double>(bound));
      if (exact.has_value() != brute.has_value() || (exact && exact->cost != *brute)) {
        out.fail(where + ": rsp_exact disagrees with enumeration");
        continue;
      }
      const auto relaxed = min_cost_path_relaxed(g, u, v, bound, eps.value());
      if (exact) {
        ++feasible;
        if (!relaxed) {
          out.fail(where + ": relaxed variant found nothing");
        } else {
          if (relaxed->cost > exact->cost) out.fail(where + ": relaxed cost above exact");
          if (relaxed->cost < exact->cost) ++strictly_cheaper;
        }
      }
      if (relaxed) {
        if (!is_valid_path(g, *relaxed, u, v)) out.fail(where + ": relaxed path invalid");
        if (!within(relaxed->length, eps, bound)) out.fail(where + ": relaxed length above (1+eps)D");
      }

      std::vector<double> w(g.edge_count());
      for (double& x : w) x = rng.unit() * 50.0;
      const auto hassin = min_weight_path_hassin(g, w, u, v, bound, eps.value());
      const auto lightest = testing::brute_force_min_weight(g, w, u, v, bound);
      if (hassin.has_value() != lightest.has_value()) {
        out.fail(where + ": Hassin feasibility differs from enumeration");
        continue;
      }
      if (!hassin) continue;
      double weight = 0;
      for (EdgeId e : hassin->path.edges) weight += w[e];
      if (!is_valid_path(g, hassin->path, u, v)) out.fail(where + ": Hassin path invalid");
      if (hassin->path.length > bound) out.fail(where + ": Hassin length above D");
      if (std::abs(weight - hassin->weight) > 1e-9 * std::max(1.0, weight)) {
        out.fail(where + ": Hassin weight misreported");
      }
      if (weight > (1 + eps.value()) * *lightest + 1e-9) out.fail(where + ": Hassin weight above (1+eps)·opt");
    }
  }
  out.detail = fmt("%zu graphs, %zu queries (%zu feasible, %zu relaxed strictly cheaper than exact)",
                   kGraphs, queries, feasible, strictly_cheaper);
  return out;
}

// ---------------------------------------------------------------------------
// 2, 3. Recursive greedy against exact DSLST.

struct SlstSuite {
  std::size_t instances = 0;
  double worst_ratio = 0;       // cost / exact cost
  double worst_ratio_slack = 0;  // ratio / ratio_bound(2,|R|)
  double worst_length = 0;      // tree distance / d(t)
  std::size_t ratio_violations = 0;
  std::size_t length_violations = 0;
  std::size_t structural = 0;   // invalid tree, missing terminal, no solution
  std::string first_problem;
};

SlstSuite run_slst_suite(Frac eps1, std::size_t count) {
  constexpr std::int64_t kSlack[][2] = {{1, 1}, {5, 4}, {3, 2}, {2, 1}};
  SlstSuite s;
  Rng rng(0xAC2);
  auto problem = [&](std::size_t i, const char* what) {
    if (s.first_problem.empty()) s.first_problem = fmt("instance %zu: %s", i, what);
  };
  for (std::size_t i = 0; i < count; ++i) {
    GraphShape shape;
    shape.n = rng.uniform(3, 8);
    shape.m = rng.uniform(shape.n, 14);
    shape.max_cost = 20;
    shape.seed = 1000 + i;
    const std::size_t k = rng.uniform(1, std::min<std::size_t>(4, shape.n - 1));
    const auto* c = kSlack[i % 4];
    const SlstInstance inst = generate_slst(shape, k, Rational(c[0], c[1]));
    ++s.instances;

    SlstParams p;
    p.level = 2;
    p.eps1 = eps1.value();
    const auto tree = shallow_light(inst, p);
    const auto exact = exact_dslst(inst, inst.bounds.size());
    if (!tree || !exact) {
      ++s.structural;
      problem(i, !tree ? "greedy returned nothing" : "oracle found no tree");
      continue;
    }
    if (!is_out_arborescence(inst.graph, *tree) || tree->covered() != inst.bounds.size()) {
      ++s.structural;
      problem(i, "not an arborescence covering R");
    }
    const double ratio = static_cast<double>(tree->cost) / static_cast<double>(exact->cost);
    const double bound = ratio_bound(2, static_cast<double>(inst.bounds.size()));
    s.worst_ratio = std::max(s.worst_ratio, ratio);
    s.worst_ratio_slack = std::max(s.worst_ratio_slack, ratio / bound);
    if (ratio > bound) {
      ++s.ratio_violations;
      problem(i, "ratio above g(2,|R|)");
    }
    const auto d = testing::floyd_warshall(inst.graph, tree->edges);
    for (const auto& [t, dt] : inst.bounds) {
      const Distance got = d[inst.root][t];
      if (!got || !within(*got, eps1, dt)) {
        ++s.length_violations;
        problem(i, "terminal beyond (1+eps1)·d(t)");
        continue;
      }
      if (dt > 0) s.worst_length = std::max(s.worst_length, static_cast<double>(*got) / dt);
    }
  }
  return s;
}

Outcome slst_ratio(const SlstSuite& s) {
  Outcome out;
  if (s.structural) out.fail(s.first_problem);
  if (s.ratio_violations || s.length_violations) out.fail(s.first_problem);
  out.detail = fmt("%zu instances, worst cost ratio %.3f (%.3f of g(2,|R|)), worst d_T/d %.3f",
                   s.instances, s.worst_ratio, s.worst_ratio_slack, s.worst_length);
  return out;
}

Outcome slst_lengths(const std::vector<std::pair<Frac, SlstSuite>>& suites) {
  Outcome out;
  std::ostringstream detail;
  for (const auto& [eps1, s] : suites) {
    if (s.length_violations || s.structural) out.fail(fmt("eps1=%g: %s", eps1.value(), s.first_problem.c_str()));
    detail << fmt("eps1=%g: %zu violations, worst d_T/d %.3f; ", eps1.value(), s.length_violations,
                  s.worst_length);
  }
  out.detail = detail.str();
  out.detail.resize(out.detail.size() - 2);
  return out;
}

// ---------------------------------------------------------------------------
// 4. Column-generation LP against the integral optimum.

Outcome lp_bound() {
  constexpr double kEps[] = {0.1, 0.25, 0.5};
  constexpr std::size_t kCount = 150;
  Outcome out;
  Rng rng(0xAC4);
  double worst = 0, worst_eps = 0;
  std::size_t columns = 0;
  for (std::size_t i = 0; i < kCount; ++i) {
    GraphShape shape;
    shape.n = rng.uniform(3, 7);
    shape.m = rng.uniform(shape.n, 14);
    shape.max_cost = 20;
    shape.seed = 2000 + i;
    const Digraph g = generate_graph(shape, shape.max_length);
    const Length diam = diameter(g);
    const Length bound = diam + rng.uniform(0, diam / 2);
    const double eps = kEps[i % 3];
    const std::string where = fmt("instance %zu", i);

    const auto exact = exact_ndbd({g, bound});
    if (!exact) {
      out.fail(where + ": oracle found no subgraph");
      continue;
    }
    const auto demands = bounded_pair_demands(g, bound);
    LpParams p;
    p.eps = eps;
    const FractionalSolution sol = solve_fractional(g, demands, p);
    const double exact_cost = static_cast<double>(exact->cost);
    if (sol.objective > exact_cost * (1 + eps) + 1e-6) out.fail(where + ": objective above (1+eps)·OPT");
    if (sol.dual_bound > sol.objective + 1e-6) out.fail(where + ": dual bound above objective");
    if (sol.objective / exact_cost > worst) {
      worst = sol.objective / exact_cost;
      worst_eps = eps;
    }

    for (std::size_t q = 0; q < demands.size(); ++q) {
      const PairDemand& d = demands[q];
      double flow = 0;
      std::vector<double> through(g.edge_count(), 0.0);
      for (const PathColumn& col : sol.columns[q]) {
        ++columns;
        Length len = 0;
        for (EdgeId e : col.path.edges) len += g.edge(e).length;
        if (!is_valid_path(g, col.path, d.u, d.v)) out.fail(where + ": column is not a u→v path");
        if (len != col.path.length || len > d.bound) out.fail(where + ": column longer than L");
        flow += col.flow;
        for (EdgeId e : std::set<EdgeId>(col.path.edges.begin(), col.path.edges.end())) through[e] += col.flow;
      }
      if (flow < 1 - 1e-6) out.fail(where + ": demand covered by less than one unit");
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (through[e] > sol.x[e] + 1e-6) out.fail(where + ": flow exceeds x_e");
      }
    }
  }
  out.detail = fmt("%zu instances, %zu columns, worst LP/OPT %.4f (eps %g)", kCount, columns, worst, worst_eps);
  return out;
}

// ---------------------------------------------------------------------------
// 5. Randomized rounding statistics.

Outcome rounding_statistics() {
  constexpr std::size_t kSeeds = 1000, kEdges = 30, kNodes = 16;
  Outcome out;
  const double gamma = rounding_gamma(kNodes);
  Rng rng(0xAC5);
  double worst_dev = 0, worst_z = 0;
  // Vectors 0 and 1 keep γx_e < 1; vectors 2 and 3 clip part of the mass.
  for (int vec = 0; vec < 4; ++vec) {
    const bool clipped = vec >= 2;
    std::vector<double> x(kEdges);
    std::vector<double> cost(kEdges);
    for (std::size_t e = 0; e < kEdges; ++e) {
      x[e] = rng.unit() * (clipped ? 2.0 : 0.95) / gamma;
      cost[e] = static_cast<double>(rng.uniform(1, 50));
    }
    x[0] = 0.3 / gamma;
    x[1] = 0.0;
    if (clipped) x[2] = 1.0;

    std::vector<std::size_t> hits(kEdges, 0);
    double sum = 0, sum_sq = 0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      double c = 0;
      for (EdgeId e : round_edges(x, kNodes, seed)) {
        ++hits[e];
        c += cost[e];
      }
      sum += c;
      sum_sq += c * c;
    }
    double objective = 0, expected = 0;
    for (std::size_t e = 0; e < kEdges; ++e) {
      const double p = std::min(gamma * x[e], 1.0);
      const double dev = std::abs(static_cast<double>(hits[e]) / kSeeds - p);
      worst_dev = std::max(worst_dev, dev);
      if (dev > 0.05) out.fail(fmt("vector %d edge %zu: frequency off by %.3f", vec, e, dev));
      objective += cost[e] * x[e];
      expected += cost[e] * p;
    }
    const double mean = sum / kSeeds;
    const double se = std::sqrt(std::max(0.0, sum_sq / kSeeds - mean * mean) / (kSeeds - 1));
    // Clipping only lowers E[cost], so there the comparison with γ·objective
    // is one-sided and the two-sided check is against Σ c_e·min(γx_e, 1).
    const double z_gamma = (mean - gamma * objective) / se;
    const double z_exact = (mean - expected) / se;
    worst_z = std::max(worst_z, std::abs(clipped ? z_exact : z_gamma));
    if (clipped ? (z_gamma > 3 || std::abs(z_exact) > 3) : std::abs(z_gamma) > 3) {
      out.fail(fmt("vector %d: mean cost %.2f vs γ·objective %.2f (se %.2f)", vec, mean, gamma * objective, se));
    }
  }
  out.detail = fmt("4 vectors x %zu seeds, gamma %.3f, worst |freq - p| %.3f, worst |z| %.2f", kSeeds,
                   gamma, worst_dev, worst_z);
  return out;
}

// ---------------------------------------------------------------------------
// 6. NDBD end to end.

struct NdbdRun {
  bool ok = false;
  double worst = 0;
};

/// Checks the report and recomputes every pair distance in H independently.
NdbdRun check_ndbd(const NdbdInstance& inst, const RunReport& r, double allowed) {
  NdbdRun run;
  const auto d = testing::floyd_warshall(inst.graph, r.edges);
  bool independent = true;
  const std::size_t n = inst.graph.node_count();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      if (!d[u][v]) {
        independent = false;
        run.worst = INFINITY;
        continue;
      }
      const double f = static_cast<double>(*d[u][v]) / static_cast<double>(inst.bound);
      run.worst = std::max(run.worst, f);
      if (f > allowed) independent = false;
    }
  }
  const bool reported = r.verification.ok && r.verification.worst_violation &&
                        std::abs(*r.verification.worst_violation - run.worst) < 1e-12;
  run.ok = independent && reported;
  return run;
}

NdbdInstance ndbd_instance(Rng& rng, std::size_t n, std::size_t m, std::uint64_t seed) {
  GraphShape shape;
  shape.n = n;
  shape.m = m;
  shape.max_cost = 20;
  shape.seed = seed;
  Digraph g = generate_graph(shape, shape.max_length);
  const Length diam = diameter(g);
  const Length bound = diam + rng.uniform(0, diam / 2);
  return {std::move(g), bound};
}

Outcome ndbd_end_to_end() {
  constexpr double kEps[] = {0.25, 0.5, 1.0};
  constexpr std::size_t kSmall = 50, kLarge = 20;
  Outcome out;
  Rng rng(0xAC6);

  std::size_t small_ok = 0, with_oracle = 0;
  double worst_factor = 0, worst_ratio = 0, worst_ratio_slack = 0;
  for (std::size_t i = 0; i < kSmall; ++i) {
    const std::size_t n = 4 + i % 17;
    const std::size_t m = n <= 10 && i % 2 == 0 ? rng.uniform(n, 14) : rng.uniform(n, 2 * n);
    const NdbdInstance inst = ndbd_instance(rng, n, m, 3000 + i);
    SolveParams p;
    p.eps = kEps[i % 3];
    p.seed = 3000 + i;
    const auto start = Clock::now();
    const RunReport r = solve_ndbd(inst, p);
    const double allowed = 2 * (1 + p.eps);
    const NdbdRun run = check_ndbd(inst, r, allowed);
    progress("  ndbd n=%zu m=%zu L=%llu eps=%g: worst %.3f, %zu LP rounds, %.1f s", n, m,
             static_cast<unsigned long long>(inst.bound), p.eps, run.worst, r.lp_rounds,
             std::chrono::duration<double>(Clock::now() - start).count());
    worst_factor = std::max(worst_factor, run.worst);
    if (run.ok) {
      ++small_ok;
    } else {
      out.fail(fmt("n=%zu run %zu: worst violation %.3f above %.3f", n, i, run.worst, allowed));
    }
    if (m <= 14) {
      ++with_oracle;
      const auto exact = exact_ndbd(inst);
      const double ratio = static_cast<double>(r.cost) / static_cast<double>(exact->cost);
      const double ceiling = ratio_bound(2, static_cast<double>(n)) * static_cast<double>(*r.delta);
      worst_ratio = std::max(worst_ratio, ratio);
      worst_ratio_slack = std::max(worst_ratio_slack, ratio / ceiling);
      if (ratio > ceiling) out.fail(fmt("run %zu: cost ratio %.3f above g(2,n)·δ", i, ratio));
    }
  }

  std::size_t large_ok = 0;
  double large_worst = 0, h1_settled = 0;
  for (std::size_t i = 0; i < kLarge; ++i) {
    const std::size_t n = 30 + 10 * (i % 4);
    const NdbdInstance inst = ndbd_instance(rng, n, 2 * n, 4000 + i);
    SolveParams p;
    p.eps = 0.5;
    p.seed = 4000 + i;
    const auto start = Clock::now();
    const RunReport r = solve_ndbd(inst, p);
    const NdbdRun run = check_ndbd(inst, r, 2 * (1 + p.eps));
    const auto demands = bounded_pair_demands(inst.graph, inst.bound);
    h1_settled += 1.0 - static_cast<double>(verify_settled(inst.graph, r.rounded_edges, demands).size()) /
                            static_cast<double>(demands.size());
    progress("  ndbd n=%zu m=%zu L=%llu eps=%g: worst %.3f, %zu LP rounds, %.1f s", n, 2 * n,
             static_cast<unsigned long long>(inst.bound), p.eps, run.worst, r.lp_rounds,
             std::chrono::duration<double>(Clock::now() - start).count());
    large_worst = std::max(large_worst, run.worst);
    if (run.ok) ++large_ok;
  }
  const double rate = static_cast<double>(large_ok) / kLarge;
  if (rate < 0.95) out.fail(fmt("feasibility rate %.2f below 0.95 on n in [30,60]", rate));

  out.detail = fmt(
      "n<=20: %zu/%zu within 2(1+eps), worst %.3f; oracle subset %zu runs, worst ratio %.3f "
      "(%.4f of g(2,n)·delta); n in [30,60]: %zu/%zu feasible, worst %.3f, rounded LP alone "
      "settles %.1f%% of pairs",
      small_ok, kSmall, worst_factor, with_oracle, worst_ratio, worst_ratio_slack, large_ok, kLarge,
      large_worst, 100 * h1_settled / kLarge);
  return out;
}

// ---------------------------------------------------------------------------
// 7. Spanners.

Outcome spanner_end_to_end() {
  constexpr std::int64_t kAlpha[][2] = {{1, 1}, {3, 2}, {2, 1}};
  constexpr double kEps[] = {0.25, 0.5};
  constexpr std::size_t kCount = 60;
  Outcome out;
  Rng rng(0xAC7);
  std::size_t pairs = 0, with_oracle = 0;
  double worst_stretch_slack = 0, worst_ratio = 0;
  for (std::size_t i = 0; i < kCount; ++i) {
    const std::size_t n = rng.uniform(3, 10);
    const std::size_t m = rng.uniform(n, std::min<std::size_t>(2 * n, 20));
    const Rational alpha(kAlpha[i % 3][0], kAlpha[i % 3][1]);
    SpannerInstance inst;
    if (i % 2 == 0) {
      GraphShape shape;
      shape.n = n;
      shape.m = m;
      shape.seed = 5000 + i;
      inst = generate_spanner(shape, alpha);
    } else {
      // Not necessarily strongly connected: unreachable pairs are unconstrained.
      inst = {testing::random_digraph(rng, n, m, 10, 10), alpha};
    }
    SolveParams p;
    p.eps = kEps[i % 2];
    p.seed = 5000 + i;
    const RunReport r = solve_spanner(inst, p);
    const double a = alpha.value();
    const double eps_prime = a * p.eps1();
    const double allowed = (a + eps_prime) * a;

    const auto dg = testing::floyd_warshall(inst.graph, {}, true);
    const auto dh = testing::floyd_warshall(inst.graph, r.edges);
    bool ok = r.verification.ok;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = 0; v < n; ++v) {
        if (u == v || !dg[u][v]) continue;
        ++pairs;
        if (!dh[u][v]) {
          ok = false;
          continue;
        }
        const double stretch = static_cast<double>(*dh[u][v]) / static_cast<double>(*dg[u][v]);
        worst_stretch_slack = std::max(worst_stretch_slack, stretch / allowed);
        if (stretch > allowed * (1 + 1e-12)) ok = false;
      }
    }
    if (!ok) out.fail(fmt("instance %zu (alpha %s): a pair exceeds (alpha+eps')·alpha", i, alpha.str().c_str()));
    if (m <= 14) {
      ++with_oracle;
      const Subgraph exact = exact_spanner(inst);
      if (exact.cost > 0) {
        worst_ratio = std::max(worst_ratio, static_cast<double>(r.cost) / static_cast<double>(exact.cost));
      }
    }
  }
  out.detail = fmt("%zu instances, %zu constrained pairs, worst stretch at %.3f of the allowance; "
                   "cost ratio vs oracle on %zu instances: worst %.3f",
                   kCount, pairs, worst_stretch_slack, with_oracle, worst_ratio);
  return out;
}

// ---------------------------------------------------------------------------
// 8. Determinism.

Outcome determinism() {
  Outcome out;
  std::size_t compared = 0;
  auto same = [&](const std::string& a, const std::string& b, const std::string& what) {
    ++compared;
    if (a != b) out.fail(what + " differs between runs");
  };
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GraphShape shape;
    shape.n = 12;
    shape.m = 24;
    shape.seed = seed;
    SolveParams p;
    p.seed = seed;
    SolveParams serial = p;
    serial.workers = 1;

    const NdbdInstance nd = generate_ndbd(shape, 60);
    const std::string nd_report = write_report(solve_ndbd(nd, p));
    same(nd_report, write_report(solve_ndbd(nd, p)), "ndbd report");
    same(nd_report, write_report(solve_ndbd(nd, serial)), "ndbd report (one worker)");

    const SpannerInstance sp = generate_spanner(shape, Rational(3, 2));
    const std::string sp_report = write_report(solve_spanner(sp, p));
    same(sp_report, write_report(solve_spanner(sp, p)), "spanner report");
    same(sp_report, write_report(solve_spanner(sp, serial)), "spanner report (one worker)");

    const SlstInstance sl = generate_slst(shape, 4, Rational(3, 2));
    same(write_report(solve_slst(sl, p)), write_report(solve_slst(sl, p)), "slst report");

    const auto path = [&] {
      const auto q = min_cost_path_relaxed(nd.graph, 0, 5, 20, 0.25);
      return q ? fmt("%llu", static_cast<unsigned long long>(q->cost)) + ":" + std::to_string(q->edges.size()) : "-";
    };
    same(path(), path(), "rsp answer");
  }
  for (const char* config : {
           R"({"kind":"slst","count":12,"n":7,"m":12,"seed":10,"terminals":3,"slack":"3/2"})",
           R"({"kind":"ndbd","count":6,"n":7,"m":12,"L":40,"eps":0.5})",
           R"({"kind":"spanner","count":6,"n":6,"m":10,"alpha":"3/2","eps":0.5})"}) {
    const BenchConfig c = parse_bench_config(config);
    BenchConfig serial = c;
    serial.workers = 1;
    const std::string csv = bench_csv(run_bench(c));
    same(csv, bench_csv(run_bench(c)), std::string("bench csv ") + c.kind);
    same(csv, bench_csv(run_bench(serial)), std::string("bench csv ") + c.kind + " (one worker)");
  }
  out.detail = fmt("%zu byte comparisons of reports, rsp answers and bench CSVs", compared);
  return out;
}

// ---------------------------------------------------------------------------
// 9. Runtime scaling of the SLST solver (logged).

Outcome slst_runtime() {
  constexpr std::size_t kPerSize = 6, kTerminals = 4;
  constexpr int kLevel = 2;
  Outcome out;
  std::vector<std::pair<std::size_t, double>> timing;
  for (std::size_t n : {32u, 64u}) {
    double seconds = 0;
    for (std::size_t i = 0; i < kPerSize; ++i) {
      GraphShape shape;
      shape.n = n;
      shape.m = 2 * n;
      shape.seed = 6000 + i;
      const SlstInstance inst = generate_slst(shape, kTerminals, Rational(3, 2));
      SlstParams p;
      p.level = kLevel;
      const auto start = Clock::now();
      const auto tree = shallow_light(inst, p);
      seconds += std::chrono::duration<double>(Clock::now() - start).count();
      if (!tree) out.fail("no tree returned");
    }
    timing.emplace_back(n, seconds / kPerSize);
  }
  // Degree i+1+2i in n when m and k are counted as growing with n.
  const double envelope = std::pow(2.0, kLevel + 1 + 2 * kLevel);
  const double growth = timing[1].second / std::max(timing[0].second, 1e-9);
  if (growth > 2 * envelope) out.fail(fmt("growth %.1fx exceeds 2x of 2^(3i+1)", growth));
  out.detail = fmt("mean %.4f s at n=%zu, %.4f s at n=%zu, growth %.1fx vs envelope %.0fx "
                   "(x2 slack; logged, not gating)",
                   timing[0].second, timing[0].first, timing[1].second, timing[1].first, growth, envelope);
  return out;
}

}  // namespace
}  // namespace slnet

int main(int argc, char** argv) {
  using namespace slnet;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "-v") {
      verbose = true;
    } else {
      only.insert(std::atoi(argv[i]));
    }
  }
  auto wanted = [&](int id) { return only.empty() || only.count(id); };

  // ctest hides the output of passing tests, so keep a copy on disk.
  std::FILE* report = std::fopen("acceptance_report.txt", "w");
  bool all_pass = true;
  auto run = [&](int id, const char* name, bool gating, const std::function<Outcome()>& body) {
    if (!wanted(id)) return;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::string line = fmt("C%d %s %s: ", id, o.pass ? "PASS" : "FAIL", name) + o.detail +
                       fmt(" [%.1f s]\n", seconds);
    if (!o.pass) line += "   first failure: " + o.first_failure + "\n";
    for (std::FILE* f : {stdout, report}) {
      if (!f) continue;
      std::fputs(line.c_str(), f);
      std::fflush(f);
    }
    if (gating && !o.pass) all_pass = false;
  };

  run(1, "rsp dominance", true, rsp_dominance);

  std::vector<std::pair<Frac, SlstSuite>> suites;
  run(2, "slst ratio", true, [&] {
    suites.emplace_back(Frac{1, 4}, run_slst_suite({1, 4}, 300));
    return slst_ratio(suites.back().second);
  });
  run(3, "slst lengths", true, [&] {
    for (Frac eps1 : {Frac{1, 10}, Frac{1, 1}}) suites.emplace_back(eps1, run_slst_suite(eps1, 300));
    if (suites.size() < 3) suites.emplace_back(Frac{1, 4}, run_slst_suite({1, 4}, 300));
    return slst_lengths(suites);
  });
  run(4, "lp bound", true, lp_bound);
  run(5, "rounding statistics", true, rounding_statistics);
  run(6, "ndbd end to end", true, ndbd_end_to_end);
  run(7, "spanner end to end", true, spanner_end_to_end);
  run(8, "determinism", true, determinism);
  run(9, "slst runtime envelope", false, slst_runtime);
  if (report) std::fclose(report);
  return all_pass ? 0 : 1;
}
