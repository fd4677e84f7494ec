#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "slnet/shortest_paths.hpp"

namespace slnet::testing {

namespace {

Edge random_edge(Rng& rng, NodeId tail, NodeId head, Cost max_cost, Length max_length) {
  return Edge{tail, head, rng.uniform(1, max_cost), rng.uniform(1, max_length)};
}

}  // namespace

Digraph random_digraph(Rng& rng, std::size_t n, std::size_t m, Cost max_cost, Length max_length) {
  std::vector<Edge> edges;
  while (edges.size() < m && n > 1) {
    const auto u = static_cast<NodeId>(rng.uniform(0, n - 1));
    const auto v = static_cast<NodeId>(rng.uniform(0, n - 1));
    if (u == v) continue;
    edges.push_back(random_edge(rng, u, v, max_cost, max_length));
  }
  return Digraph(n, std::move(edges));
}

Digraph random_strong_digraph(Rng& rng, std::size_t n, std::size_t extra, Cost max_cost,
                              Length max_length) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n && n > 1; ++i) {
    edges.push_back(random_edge(rng, static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n),
                                max_cost, max_length));
  }
  const Digraph rest = random_digraph(rng, n, extra, max_cost, max_length);
  edges.insert(edges.end(), rest.edges().begin(), rest.edges().end());
  return Digraph(n, std::move(edges));
}

SlstInstance random_slst(Rng& rng, const Digraph& g, std::size_t k) {
  const auto dist = shortest_lengths_from(g, 0);
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
  SlstInstance inst{g, 0, {}};
  for (NodeId v : order) {
    if (inst.bounds.size() == k) break;
    if (v == 0 || !dist[v]) continue;
    inst.bounds[v] = *dist[v] + rng.uniform(0, *dist[v]);
  }
  return inst;
}

}  // namespace slnet::testing
