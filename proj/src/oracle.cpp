#include "slnet/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "slnet/shortest_paths.hpp"

namespace slnet {

namespace {

void enforce_cap(const Digraph& g, std::size_t cap) {
  if (g.edge_count() > cap) {
    throw CapExceeded("oracle enumerates at most " + std::to_string(cap) + " edges, instance has " +
                      std::to_string(g.edge_count()));
  }
}

std::vector<Distance> lengths_in(const Digraph& g, std::span<const char> mask, NodeId source) {
  return shortest_path_tree(g, source, mask).distance;
}

}  // namespace

std::optional<Subgraph> first_subset_by_cost(const Digraph& g, std::size_t cap,
                                             const std::function<bool(std::span<const char>)>& accept) {
  enforce_cap(g, cap);
  const std::size_t m = g.edge_count();
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).cost < g.edge(b).cost; });

  // A subset is a bitmask over `order`; its successors append the next index
  // after its largest one, or move that largest index one step right. Every
  // subset is generated once, never before a cheaper one.
  struct Node {
    Cost cost;
    int size;
    std::uint32_t mask;
    int last;  // largest index in mask, -1 for the empty set
  };
  auto later = [](const Node& a, const Node& b) {
    return std::tie(a.cost, a.size, a.mask) > std::tie(b.cost, b.size, b.mask);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> heap(later);
  heap.push(Node{0, 0, 0, -1});
  std::vector<char> mask(m, 0);
  while (!heap.empty()) {
    const Node cur = heap.top();
    heap.pop();
    std::fill(mask.begin(), mask.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (cur.mask >> i & 1u) mask[order[i]] = 1;
    }
    if (accept(mask)) {
      Subgraph s;
      for (EdgeId e = 0; e < m; ++e) {
        if (mask[e]) s.edges.push_back(e);
      }
      s.cost = cur.cost;
      return s;
    }
    const int next = cur.last + 1;
    if (next < static_cast<int>(m)) {
      const Cost add = g.edge(order[next]).cost;
      heap.push(Node{cur.cost + add, cur.size + 1, cur.mask | (1u << next), next});
      if (cur.last >= 0) {
        const Cost swap = cur.cost - g.edge(order[cur.last]).cost + add;
        heap.push(Node{swap, cur.size, (cur.mask & ~(1u << cur.last)) | (1u << next), next});
      }
    }
  }
  return std::nullopt;
}

std::optional<TreeSolution> exact_dslst(const SlstInstance& inst, std::size_t k) {
  const Digraph& g = inst.graph;
  enforce_cap(g, kDslstEdgeCap);
  if (k > inst.bounds.size()) throw Error("k exceeds the number of terminals");
  auto served = [&](std::span<const char> mask) {
    const auto dist = lengths_in(g, mask, inst.root);
    std::size_t count = 0;
    for (const auto& [t, d] : inst.bounds) {
      if (dist[t] && *dist[t] <= d) ++count;
    }
    return count;
  };
  const auto best = first_subset_by_cost(g, kDslstEdgeCap,
                                         [&](std::span<const char> mask) { return served(mask) >= k; });
  if (!best) return std::nullopt;

  // The shortest-path tree of the optimal subset is itself optimal.
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId e : best->edges) mask[e] = 1;
  const ShortestPathTree spt = shortest_path_tree(g, inst.root, mask);
  TreeSolution tree;
  tree.root = inst.root;
  std::vector<char> in_tree(g.node_count(), 0);
  in_tree[inst.root] = 1;
  for (const auto& [t, d] : inst.bounds) {
    if (!spt.distance[t] || *spt.distance[t] > d) continue;
    tree.terminal_distance[t] = *spt.distance[t];
    for (EdgeId e : tree_path(g, spt, t)) {
      if (!in_tree[g.edge(e).head]) tree.edges.push_back(e);
      in_tree[g.edge(e).head] = 1;
    }
  }
  tree.edges = normalize_edge_set(std::move(tree.edges));
  tree.cost = g.cost_of(tree.edges);
  return tree;
}

std::optional<Subgraph> exact_ndbd(const NdbdInstance& inst) {
  const Digraph& g = inst.graph;
  enforce_cap(g, kSubgraphEdgeCap);
  if (!check_feasible(inst)) return std::nullopt;
  const std::size_t n = g.node_count();
  return first_subset_by_cost(g, kSubgraphEdgeCap, [&](std::span<const char> mask) {
    // Every node needs an outgoing and an incoming edge once n ≥ 2.
    std::vector<char> out(n, 0), in(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (mask[e] && !g.edge(e).is_loop()) out[g.edge(e).tail] = in[g.edge(e).head] = 1;
    }
    if (n >= 2 && (std::count(out.begin(), out.end(), 0) || std::count(in.begin(), in.end(), 0))) {
      return false;
    }
    for (NodeId u = 0; u < n; ++u) {
      const auto dist = lengths_in(g, mask, u);
      for (NodeId v = 0; v < n; ++v) {
        if (!dist[v] || *dist[v] > inst.bound) return false;
      }
    }
    return true;
  });
}

Subgraph exact_spanner(const SpannerInstance& inst) {
  const Digraph& g = inst.graph;
  enforce_cap(g, kSubgraphEdgeCap);
  const std::size_t n = g.node_count();
  const DistanceMatrix base = all_pairs_lengths(g);
  std::vector<std::vector<Distance>> limit(n, std::vector<Distance>(n));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (base[u][v]) limit[u][v] = inst.stretch.floor_times(*base[u][v]);
    }
  }
  const auto best = first_subset_by_cost(g, kSubgraphEdgeCap, [&](std::span<const char> mask) {
    for (NodeId u = 0; u < n; ++u) {
      const auto dist = lengths_in(g, mask, u);
      for (NodeId v = 0; v < n; ++v) {
        if (limit[u][v] && (!dist[v] || *dist[v] > *limit[u][v])) return false;
      }
    }
    return true;
  });
  return *best;  // G itself always qualifies
}

}  // namespace slnet
