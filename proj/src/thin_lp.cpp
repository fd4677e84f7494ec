#include "slnet/thin_lp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "slnet/lp.hpp"
#include "slnet/random.hpp"
#include "slnet/rsp.hpp"
#include "slnet/shortest_paths.hpp"

namespace slnet {

namespace {

std::string pair_name(const PairDemand& d) {
  return "(" + std::to_string(d.u + 1) + "," + std::to_string(d.v + 1) + ") with bound " +
         std::to_string(d.bound);
}

/// Restricted master over the generated columns. Rows: one covering row per
/// demand, one coupling row x_e − Σ_{P∋e} f_P ≥ 0 per (edge, demand) in use.
class RestrictedMaster {
 public:
  RestrictedMaster(const Digraph& g, std::size_t demand_count)
      : g_(g), coupling_(demand_count), columns_(demand_count) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      lp_.add_column(static_cast<double>(g.edge(e).cost), 0.0, lp::kInfinity);
    }
    for (std::size_t q = 0; q < demand_count; ++q) demand_row_.push_back(lp_.add_row(1.0, lp::kInfinity));
  }

  /// False if the path is already a column of demand q.
  bool add(std::size_t q, PathWitness path) {
    for (const auto& [p, col] : columns_[q]) {
      if (p.edges == path.edges) return false;
    }
    std::vector<lp::Entry> entries = {{demand_row_[q], 1.0}};
    std::set<EdgeId> distinct(path.edges.begin(), path.edges.end());
    for (EdgeId e : distinct) {
      auto [it, fresh] = coupling_[q].try_emplace(e, -1);
      if (fresh) {
        const lp::Entry x_entry[] = {{static_cast<int>(e), 1.0}};
        it->second = lp_.add_row(0.0, lp::kInfinity, x_entry);
      }
      entries.emplace_back(it->second, -1.0);
    }
    const int col = lp_.add_column(0.0, 0.0, lp::kInfinity, entries);
    columns_[q].emplace_back(std::move(path), col);
    return true;
  }

  void solve() {
    const lp::Status status = lp_.solve();
    if (status != lp::Status::kOptimal) {
      throw LpFailure(std::string("restricted master returned ") + lp::to_string(status));
    }
  }

  double alpha(std::size_t q) const { return std::max(0.0, lp_.row_dual(demand_row_[q])); }

  /// Pricing weights for demand q: β on its coupling rows, zero elsewhere.
  void weights(std::size_t q, std::vector<double>& w) const {
    std::fill(w.begin(), w.end(), 0.0);
    for (const auto& [e, row] : coupling_[q]) w[e] = std::max(0.0, lp_.row_dual(row));
  }

  std::map<EdgeId, double> beta(std::size_t q) const {
    std::map<EdgeId, double> out;
    for (const auto& [e, row] : coupling_[q]) out[e] = std::max(0.0, lp_.row_dual(row));
    return out;
  }

  double objective() const { return lp_.objective(); }
  double x(EdgeId e) const { return std::max(0.0, lp_.column_value(static_cast<int>(e))); }

  std::vector<PathColumn> columns(std::size_t q) const {
    std::vector<PathColumn> out;
    for (const auto& [p, col] : columns_[q]) out.push_back({p, std::max(0.0, lp_.column_value(col))});
    return out;
  }

 private:
  const Digraph& g_;
  lp::LinearProgram lp_;
  std::vector<int> demand_row_;
  std::vector<std::map<EdgeId, int>> coupling_;
  std::vector<std::vector<std::pair<PathWitness, int>>> columns_;
};

}  // namespace

FractionalSolution solve_fractional(const Digraph& g, std::span<const PairDemand> demands,
                                    const LpParams& params, DualSolution* duals) {
  if (!(params.eps > 0)) throw Error("eps must be positive");
  FractionalSolution out;
  out.x.assign(g.edge_count(), 0.0);
  out.columns.resize(demands.size());
  if (demands.empty()) {
    if (duals) *duals = DualSolution{};
    return out;
  }

  // Initial columns: shortest paths, which also prove every demand satisfiable.
  RestrictedMaster master(g, demands.size());
  {
    std::map<NodeId, ShortestPathTree> trees;
    for (std::size_t q = 0; q < demands.size(); ++q) {
      const PairDemand& d = demands[q];
      if (d.u == d.v) throw Error("demand with u = v");
      auto it = trees.find(d.u);
      if (it == trees.end()) it = trees.emplace(d.u, shortest_path_tree(g, d.u)).first;
      const Distance dist = it->second.distance[d.v];
      if (!dist || *dist > d.bound) throw UnsatisfiableDemand("no path for pair " + pair_name(d));
      master.add(q, make_path(g, d.u, tree_path(g, it->second, d.v)));
    }
  }

  // Columns priced below (1−a)α leave objective ≤ (1+a)/(1−a)·LP = (1+eps)·LP.
  const double a = params.eps / (2.0 + params.eps);
  // Finer accuracy for demands whose coarse answer could still undercut α:
  // it tightens the Lagrangian bound, which ends the tail of rounds early.
  const double b = a / 10.0;
  std::vector<double> w(g.edge_count());
  while (true) {
    master.solve();
    if (out.rounds >= params.max_rounds) {
      throw IterationLimit("column generation did not converge in " +
                           std::to_string(params.max_rounds) + " rounds");
    }
    ++out.rounds;
    std::size_t added = 0;
    double bound = 0.0;
    for (std::size_t q = 0; q < demands.size(); ++q) {
      const double alpha = master.alpha(q);
      if (alpha <= params.tolerance) continue;
      const PairDemand& d = demands[q];
      master.weights(q, w);
      const auto coarse = min_weight_path_hassin(g, w, d.u, d.v, d.bound, a);
      if (!coarse) throw UnsatisfiableDemand("no path for pair " + pair_name(d));
      // An (1+a)-approximate answer of weight ≥ (1+a)α proves none lies below α.
      if (coarse->weight >= (1.0 + a) * alpha) {
        bound += alpha;
        continue;
      }
      const auto found = min_weight_path_hassin(g, w, d.u, d.v, d.bound, b);
      if (!found) throw UnsatisfiableDemand("no path for pair " + pair_name(d));
      bound += std::min(alpha, found->weight / (1.0 + b));
      if (found->weight < (1.0 - a) * alpha - params.tolerance) {
        if (master.add(q, found->path)) ++added;
      }
    }
    // Every round's bound is a valid Lagrangian lower bound on the LP, so the
    // (1+eps) guarantee can also be certified before pricing runs dry.
    out.dual_bound = std::max(out.dual_bound, bound);
    if (added == 0 || master.objective() <= (1.0 + params.eps) * out.dual_bound) break;
  }

  out.objective = master.objective();
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.x[e] = master.x(e);
  for (std::size_t q = 0; q < demands.size(); ++q) out.columns[q] = master.columns(q);
  if (duals) {
    duals->alpha.resize(demands.size());
    duals->beta.resize(demands.size());
    for (std::size_t q = 0; q < demands.size(); ++q) {
      duals->alpha[q] = master.alpha(q);
      duals->beta[q] = master.beta(q);
    }
  }
  return out;
}

std::vector<PairDemand> bounded_pair_demands(const Digraph& g, Length bound) {
  std::vector<PairDemand> out;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto dist = shortest_lengths_from(g, u);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (u != v && dist[v] && *dist[v] <= bound) out.push_back({u, v, bound});
    }
  }
  return out;
}

std::vector<PairDemand> stretch_demands(const Digraph& g, const Rational& stretch) {
  std::vector<PairDemand> out;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto dist = shortest_lengths_from(g, u);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (u != v && dist[v]) out.push_back({u, v, stretch.floor_times(*dist[v])});
    }
  }
  return out;
}

double rounding_gamma(std::size_t n) {
  const double dn = static_cast<double>(n);
  return n <= 1 ? 0.0 : std::sqrt(dn) * std::log(dn);
}

std::vector<EdgeId> round_edges(std::span<const double> x, std::size_t n, std::uint64_t seed) {
  const double gamma = rounding_gamma(n);
  Rng rng(seed);
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < x.size(); ++e) {
    const double p = gamma * x[e];
    const double draw = rng.unit();
    if (p >= 1.0 || draw < p) kept.push_back(e);
  }
  return kept;
}

std::vector<PairDemand> verify_settled(const Digraph& g, std::span<const EdgeId> subgraph,
                                       std::span<const PairDemand> demands) {
  std::vector<char> allowed(g.edge_count(), 0);
  for (EdgeId e : subgraph) allowed[e] = 1;
  std::map<NodeId, std::vector<Distance>> from;
  std::vector<PairDemand> unsettled;
  for (const PairDemand& d : demands) {
    auto it = from.find(d.u);
    if (it == from.end()) it = from.emplace(d.u, shortest_path_tree(g, d.u, allowed).distance).first;
    const Distance dist = it->second[d.v];
    if (!dist || *dist > d.bound) unsettled.push_back(d);
  }
  return unsettled;
}

}  // namespace slnet
