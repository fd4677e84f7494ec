#include "slnet/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

namespace slnet {

namespace {

std::vector<Distance> dijkstra(const Digraph& g, NodeId source, bool forward) {
  const std::size_t n = g.node_count();
  std::vector<Distance> dist(n);
  using Item = std::pair<Length, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != *dist[v]) continue;
    for (EdgeId e : forward ? g.out_edges(v) : g.in_edges(v)) {
      const Edge& edge = g.edge(e);
      const NodeId w = forward ? edge.head : edge.tail;
      const Length nd = checked_add(d, edge.length);
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        heap.emplace(nd, w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Distance> shortest_lengths_from(const Digraph& g, NodeId source) {
  return dijkstra(g, source, true);
}

std::vector<Distance> shortest_lengths_to(const Digraph& g, NodeId target) {
  return dijkstra(g, target, false);
}

DistanceMatrix all_pairs_lengths(const Digraph& g) {
  DistanceMatrix out;
  out.reserve(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) out.push_back(shortest_lengths_from(g, u));
  return out;
}

ShortestPathTree shortest_path_tree(const Digraph& g, NodeId root, std::span<const char> allowed) {
  const std::size_t n = g.node_count();
  ShortestPathTree spt{std::vector<Distance>(n), std::vector<EdgeId>(n, kNoEdge)};
  std::vector<Cost> cost(n, 0);
  // (length, cost, node)
  using Item = std::tuple<Length, Cost, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  spt.distance[root] = 0;
  heap.emplace(0, 0, root);
  while (!heap.empty()) {
    auto [d, c, v] = heap.top();
    heap.pop();
    if (d != *spt.distance[v] || c != cost[v]) continue;
    for (EdgeId e : g.out_edges(v)) {
      if (!allowed.empty() && !allowed[e]) continue;
      const Edge& edge = g.edge(e);
      if (edge.is_loop() || edge.head == root) continue;
      const Length nd = checked_add(d, edge.length);
      const Cost nc = checked_add(c, edge.cost);
      const NodeId w = edge.head;
      // Only strict improvements move a parent, so parents are always settled
      // nodes and zero-length cycles cannot close a loop.
      if (!spt.distance[w] || nd < *spt.distance[w] || (nd == *spt.distance[w] && nc < cost[w])) {
        spt.distance[w] = nd;
        cost[w] = nc;
        spt.parent[w] = e;
        heap.emplace(nd, nc, w);
      }
    }
  }
  return spt;
}

std::vector<EdgeId> tree_path(const Digraph& g, const ShortestPathTree& spt, NodeId v) {
  std::vector<EdgeId> path;
  while (spt.parent[v] != kNoEdge) {
    path.push_back(spt.parent[v]);
    v = g.edge(spt.parent[v]).tail;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace slnet
