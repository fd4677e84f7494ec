#include "slnet/thick_trees.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slnet/random.hpp"
#include "slnet/shortest_paths.hpp"

namespace slnet {

std::size_t default_delta(std::size_t n) {
  if (n <= 1) return n;
  const double dn = static_cast<double>(n);
  const double delta = std::ceil(3.0 * std::sqrt(dn) * std::log(dn));
  return std::clamp<std::size_t>(static_cast<std::size_t>(delta), 1, n);
}

std::vector<NodeId> sample_roots(std::size_t n, const SampleConfig& cfg) {
  const std::size_t delta = std::min(n, cfg.delta == 0 ? default_delta(n) : cfg.delta);
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < delta; ++i) std::swap(nodes[i], nodes[rng.uniform(i, n - 1)]);
  nodes.resize(delta);
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

RootTreeBuilder::RootTreeBuilder(const Digraph& g, const SlstParams& params)
    : reversed_(reverse(g)), forward_(g, params), backward_(reversed_, params) {}

RootTrees RootTreeBuilder::build(NodeId root, const TerminalBounds& out_bounds,
                                 const TerminalBounds& in_bounds) {
  RootTrees trees;
  trees.root = root;
  auto out = forward_.solve(root, out_bounds, out_bounds.size());
  auto in = backward_.solve(root, in_bounds, in_bounds.size());
  if (!out || !in) {
    throw InfeasibleInstance("node " + std::to_string(root + 1) +
                             " cannot reach every terminal within its bound");
  }
  trees.out = std::move(*out);
  trees.in = std::move(*in);
  return trees;
}

RootTrees build_root_trees(const Digraph& g, NodeId root, const TerminalBounds& out_bounds,
                           const TerminalBounds& in_bounds, const SlstParams& params) {
  RootTreeBuilder builder(g, params);
  return builder.build(root, out_bounds, in_bounds);
}

std::vector<EdgeId> union_thick(const std::vector<RootTrees>& trees) {
  std::vector<EdgeId> edges;
  for (const RootTrees& t : trees) {
    edges.insert(edges.end(), t.out.edges.begin(), t.out.edges.end());
    edges.insert(edges.end(), t.in.edges.begin(), t.in.edges.end());
  }
  return normalize_edge_set(std::move(edges));
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::kThin:
      return "thin";
    case PairClass::kThick:
      return "thick";
    case PairClass::kUnknown:
      return "unknown";
    case PairClass::kUnsatisfiable:
      return "unsatisfiable";
  }
  return "?";
}

std::vector<std::vector<PairClassification>> classify_pairs_diagnostic(const Digraph& g,
                                                                       Length bound) {
  const std::size_t n = g.node_count();
  const double root_n = std::sqrt(static_cast<double>(n));
  std::vector<ShortestPathTree> trees;
  trees.reserve(n);
  for (NodeId u = 0; u < n; ++u) trees.push_back(shortest_path_tree(g, u));

  auto node_path = [&](NodeId a, NodeId b) {
    std::vector<NodeId> nodes = {a};
    for (EdgeId e : tree_path(g, trees[a], b)) nodes.push_back(g.edge(e).head);
    return nodes;
  };

  std::vector<std::vector<PairClassification>> out(n, std::vector<PairClassification>(n));
  std::vector<char> confirmed(n), seen(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      PairClassification& c = out[u][v];
      const Distance direct = trees[u].distance[v];
      if (!direct || *direct > bound) {
        c.kind = PairClass::kUnsatisfiable;
        continue;
      }
      std::vector<NodeId> witnesses;
      for (NodeId w = 0; w < n; ++w) {
        const Distance a = trees[u].distance[w], b = trees[w].distance[v];
        if (a && b && *a + *b <= bound) witnesses.push_back(w);
      }
      c.witness_nodes = witnesses.size();
      if (static_cast<double>(witnesses.size()) <= root_n) {
        c.kind = PairClass::kThin;
        continue;
      }
      // A witness walk that happens to be a simple path proves its nodes lie in V_uv.
      std::fill(confirmed.begin(), confirmed.end(), 0);
      std::size_t count = 0;
      for (NodeId w : witnesses) {
        if (confirmed[w]) continue;
        std::vector<NodeId> walk = node_path(u, w);
        const std::vector<NodeId> tail = node_path(w, v);
        walk.insert(walk.end(), tail.begin() + 1, tail.end());
        std::fill(seen.begin(), seen.end(), 0);
        bool simple = true;
        for (NodeId x : walk) {
          if (seen[x] && !(u == v && x == u)) simple = false;
          seen[x] = 1;
        }
        if (!simple) continue;
        for (NodeId x : walk) {
          if (!confirmed[x]) ++count;
          confirmed[x] = 1;
        }
      }
      c.kind = static_cast<double>(count) > root_n ? PairClass::kThick : PairClass::kUnknown;
    }
  }
  return out;
}

}  // namespace slnet
