#include "slnet/slst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "slnet/shortest_paths.hpp"

namespace slnet {

namespace {

/// ρ(a) < ρ(b) for costs over positive counts, compared exactly.
int compare_rho(Cost ca, std::size_t ka, Cost cb, std::size_t kb) {
  const unsigned __int128 lhs = static_cast<unsigned __int128>(ca) * kb;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(cb) * ka;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::vector<EdgeId> merge_edges(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Length floor_bound(double b) {
  if (b >= static_cast<double>(std::numeric_limits<Length>::max())) {
    return std::numeric_limits<Length>::max();
  }
  return static_cast<Length>(std::floor(b));
}

std::vector<Length> make_ladder(Length total_length, double eps) {
  std::vector<Length> ladder = {0};
  const double base = 1.0 + eps;
  const auto top = total_length <= 1
                       ? 0
                       : static_cast<std::int64_t>(
                             std::ceil(std::log(static_cast<double>(total_length)) / std::log(base)));
  for (std::int64_t j = 0; j <= top; ++j) ladder.push_back(floor_bound(std::pow(base, j)));
  return ladder;
}

}  // namespace

double PartialTree::rho() const {
  if (covered.empty()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(cost) / static_cast<double>(covered.size());
}

TerminalBounds to_terminal_bounds(const std::map<NodeId, Length>& bounds) {
  TerminalBounds out;
  out.reserve(bounds.size());
  for (const auto& [t, d] : bounds) out.emplace_back(t, static_cast<double>(d));
  return out;
}

double ratio_bound(int i, double k) {
  if (i < 2) throw Error("ratio bound needs level ≥ 2");
  const double di = i;
  return 2.0 * di * di * (di - 1.0) * std::pow(k, 1.0 / di) / std::pow(2.0, 1.0 / di);
}

ShallowLightSolver::ShallowLightSolver(const Digraph& g, const SlstParams& params)
    : g_(&g), params_(params), oracle_(g, params.eps1),
      ladder_(make_ladder(g.total_length(), params.eps1)), lengths_(g.node_count()),
      stamp_(g.edge_count(), 0) {
  if (params.level < 1) throw Error("level must be at least 1");
  if (params.max_rungs != 0 && ladder_.size() > params.max_rungs) ladder_.resize(params.max_rungs);
}

const std::vector<Distance>& ShallowLightSolver::lengths_from(NodeId v) {
  if (!lengths_[v]) lengths_[v] = std::make_unique<std::vector<Distance>>(shortest_lengths_from(*g_, v));
  return *lengths_[v];
}

std::size_t ShallowLightSolver::feasible_count(NodeId v, const TerminalBounds& bounds) {
  const auto& dist = lengths_from(v);
  std::size_t count = 0;
  for (const auto& [t, b] : bounds) {
    if (b >= 0 && dist[t] && static_cast<double>(*dist[t]) <= b) ++count;
  }
  return count;
}

std::vector<ShallowLightSolver::Reachable> ShallowLightSolver::level_one_paths(
    NodeId v, const TerminalBounds& bounds) {
  const auto& dist = lengths_from(v);
  std::vector<Reachable> out;
  for (const auto& [t, b] : bounds) {
    if (b < 0 || !dist[t] || static_cast<double>(*dist[t]) > b) continue;
    auto p = oracle_.path(v, t, floor_bound(b));
    if (!p) throw Error("relaxed path missing for an eligible terminal");
    out.push_back(Reachable{t, p->cost, std::move(p->edges)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Reachable& a, const Reachable& b) { return a.cost < b.cost; });
  return out;
}

std::optional<PartialTree> ShallowLightSolver::level_one(NodeId root, const TerminalBounds& bounds,
                                                         std::size_t k) {
  const auto paths = level_one_paths(root, bounds);
  if (paths.size() < k) return std::nullopt;
  PartialTree part;
  for (std::size_t i = 0; i < k; ++i) {
    part.edges.insert(part.edges.end(), paths[i].path.begin(), paths[i].path.end());
    part.covered.push_back(paths[i].terminal);
  }
  part.edges = normalize_edge_set(std::move(part.edges));
  std::sort(part.covered.begin(), part.covered.end());
  part.cost = g_->cost_of(part.edges);
  return part;
}

PartialTree ShallowLightSolver::best_subtree(int level, NodeId root, const TerminalBounds& bounds,
                                             std::size_t k) {
  if (level < 2) throw Error("best_subtree needs level ≥ 2");
  const std::size_t k_cap = params_.max_k_prime == 0 ? k : std::min(k, params_.max_k_prime);
  const double scale = 1.0 + params_.eps1;

  struct Best {
    bool found = false;
    Cost cost = 0;
    std::size_t k_prime = 0;
    NodeId v = 0;
    std::size_t rung = 0;
  } best;
  PartialTree best_tree;

  // Total order: ρ, then v, then k', then rung.
  auto improves = [&](Cost cost, std::size_t kp, NodeId v, std::size_t rung) {
    if (!best.found) return true;
    const int c = compare_rho(cost, kp, best.cost, best.k_prime);
    if (c != 0) return c < 0;
    return std::tie(v, kp, rung) < std::tie(best.v, best.k_prime, best.rung);
  };

  for (NodeId v = 0; v < g_->node_count(); ++v) {
    std::set<std::vector<EdgeId>> seen;
    for (std::size_t rung = 0; rung < ladder_.size(); ++rung) {
      auto connection = oracle_.path(root, v, ladder_[rung]);
      if (!connection) continue;
      std::vector<EdgeId> prefix = normalize_edge_set(connection->edges);
      // A repeated path repeats every candidate; the earlier rung wins ties.
      if (!seen.insert(prefix).second) continue;

      const double shift = static_cast<double>(connection->length) / scale;
      TerminalBounds reduced = bounds;
      for (auto& [t, b] : reduced) b -= shift;

      if (level == 2) {
        const auto paths = level_one_paths(v, reduced);
        const std::size_t top = std::min(k_cap, paths.size());
        ++epoch_;
        Cost cost = 0;
        auto add = [&](EdgeId e) {
          if (stamp_[e] == epoch_) return;
          stamp_[e] = epoch_;
          cost += g_->edge(e).cost;
        };
        for (EdgeId e : prefix) add(e);
        for (std::size_t kp = 1; kp <= top; ++kp) {
          for (EdgeId e : paths[kp - 1].path) add(e);
          if (!improves(cost, kp, v, rung)) continue;
          best = Best{true, cost, kp, v, rung};
          best_tree.edges = prefix;
          for (std::size_t i = 0; i < kp; ++i) {
            best_tree.edges.insert(best_tree.edges.end(), paths[i].path.begin(),
                                   paths[i].path.end());
          }
          best_tree.covered.clear();
          for (std::size_t i = 0; i < kp; ++i) best_tree.covered.push_back(paths[i].terminal);
        }
      } else {
        for (std::size_t kp = 1; kp <= k_cap; ++kp) {
          auto sub = shallow_light(level - 1, v, reduced, kp);
          if (!sub) break;  // fewer than kp feasible terminals: larger kp fails too
          std::vector<EdgeId> edges = merge_edges(prefix, sub->edges);
          const Cost cost = g_->cost_of(edges);
          if (!improves(cost, kp, v, rung)) continue;
          best = Best{true, cost, kp, v, rung};
          best_tree.edges = std::move(edges);
          best_tree.covered = std::move(sub->covered);
        }
      }
    }
  }
  if (!best.found) return PartialTree{};
  best_tree.edges = normalize_edge_set(std::move(best_tree.edges));
  std::sort(best_tree.covered.begin(), best_tree.covered.end());
  best_tree.cost = best.cost;
  return best_tree;
}

std::optional<PartialTree> ShallowLightSolver::shallow_light(int level, NodeId root,
                                                             const TerminalBounds& bounds,
                                                             std::size_t k) {
  if (k == 0) return PartialTree{};
  if (feasible_count(root, bounds) < k) return std::nullopt;
  if (level == 1) return level_one(root, bounds, k);

  PartialTree tree;
  TerminalBounds remaining = bounds;
  std::size_t left = k;
  while (left > 0) {
    PartialTree step = best_subtree(level, root, remaining, left);
    if (step.empty()) return std::nullopt;
    tree.edges = merge_edges(tree.edges, step.edges);
    tree.covered.insert(tree.covered.end(), step.covered.begin(), step.covered.end());
    std::erase_if(remaining, [&](const auto& tb) {
      return std::binary_search(step.covered.begin(), step.covered.end(), tb.first);
    });
    left -= std::min(left, step.covered.size());
  }
  std::sort(tree.covered.begin(), tree.covered.end());
  tree.cost = g_->cost_of(tree.edges);
  return tree;
}

TreeSolution ShallowLightSolver::to_tree(NodeId root, const PartialTree& part,
                                         const TerminalBounds& bounds) const {
  std::vector<char> allowed(g_->edge_count(), 0);
  for (EdgeId e : part.edges) allowed[e] = 1;
  const ShortestPathTree spt = shortest_path_tree(*g_, root, allowed);

  TreeSolution tree;
  tree.root = root;
  std::vector<char> in_tree(g_->node_count(), 0);
  in_tree[root] = 1;
  for (NodeId t : part.covered) {
    if (!spt.distance[t]) throw Error("covered terminal unreachable in its own tree");
    for (EdgeId e : tree_path(*g_, spt, t)) {
      if (!in_tree[g_->edge(e).head]) tree.edges.push_back(e);
      in_tree[g_->edge(e).head] = 1;
    }
  }
  tree.edges = normalize_edge_set(std::move(tree.edges));
  tree.cost = g_->cost_of(tree.edges);

  const double slack = 1.0 + params_.eps1;
  for (const auto& [t, b] : bounds) {
    if (!in_tree[t] || b < 0) continue;
    const Length dist = *spt.distance[t];
    if (static_cast<double>(dist) <= slack * b) tree.terminal_distance[t] = dist;
  }
  for (NodeId t : part.covered) {
    if (!tree.terminal_distance.contains(t)) throw Error("covered terminal exceeds its bound");
  }
  return tree;
}

std::optional<TreeSolution> ShallowLightSolver::solve(NodeId root, const TerminalBounds& bounds,
                                                      std::size_t k) {
  auto part = shallow_light(params_.level, root, bounds, k);
  if (!part) return std::nullopt;
  return to_tree(root, *part, bounds);
}

namespace {

std::size_t requested_k(const SlstInstance& inst, const SlstParams& params) {
  const std::size_t k = params.k == 0 ? inst.bounds.size() : params.k;
  if (k > inst.bounds.size()) throw Error("k exceeds the number of terminals");
  return k;
}

}  // namespace

std::optional<TreeSolution> shallow_light(const SlstInstance& inst, const SlstParams& params) {
  ShallowLightSolver solver(inst.graph, params);
  return solver.solve(inst.root, to_terminal_bounds(inst.bounds), requested_k(inst, params));
}

PartialTree best_subtree(const SlstInstance& inst, const SlstParams& params) {
  ShallowLightSolver solver(inst.graph, params);
  return solver.best_subtree(params.level, inst.root, to_terminal_bounds(inst.bounds),
                             requested_k(inst, params));
}

std::optional<TreeSolution> level_one(const SlstInstance& inst, const SlstParams& params) {
  ShallowLightSolver solver(inst.graph, params);
  const TerminalBounds bounds = to_terminal_bounds(inst.bounds);
  auto part = solver.level_one(inst.root, bounds, requested_k(inst, params));
  if (!part) return std::nullopt;
  return solver.to_tree(inst.root, *part, bounds);
}

}  // namespace slnet
