#include "slnet/graph.hpp"

#include <algorithm>
#include <string>

namespace slnet {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("64-bit overflow while summing " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return out;
}

namespace {

void build_index(std::size_t n, const std::vector<Edge>& edges, bool by_tail,
                 std::vector<std::size_t>& offset, std::vector<EdgeId>& index) {
  offset.assign(n + 1, 0);
  for (const Edge& e : edges) ++offset[(by_tail ? e.tail : e.head) + 1];
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
  index.assign(edges.size(), 0);
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    index[fill[by_tail ? e.tail : e.head]++] = id;
  }
}

}  // namespace

Digraph::Digraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (edges_.size() >= kNoEdge) throw Error("too many edges");
  for (const Edge& e : edges_) {
    if (e.tail >= node_count_ || e.head >= node_count_) {
      throw Error("edge endpoint out of range");
    }
    total_length_ = checked_add(total_length_, e.length);
    total_cost_ = checked_add(total_cost_, e.cost);
  }
  build_index(node_count_, edges_, true, out_offset_, out_index_);
  build_index(node_count_, edges_, false, in_offset_, in_index_);
}

std::span<const EdgeId> Digraph::out_edges(NodeId v) const {
  return std::span<const EdgeId>(out_index_).subspan(out_offset_[v],
                                                    out_offset_[v + 1] - out_offset_[v]);
}

std::span<const EdgeId> Digraph::in_edges(NodeId v) const {
  return std::span<const EdgeId>(in_index_).subspan(in_offset_[v],
                                                   in_offset_[v + 1] - in_offset_[v]);
}

Cost Digraph::cost_of(std::span<const EdgeId> edge_set) const {
  std::vector<EdgeId> ids(edge_set.begin(), edge_set.end());
  ids = normalize_edge_set(std::move(ids));
  Cost total = 0;
  for (EdgeId e : ids) total = checked_add(total, edges_.at(e).cost);
  return total;
}

Digraph reverse(const Digraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) std::swap(e.tail, e.head);
  return Digraph(g.node_count(), std::move(edges));
}

Digraph spanning_subgraph(const Digraph& g, std::span<const EdgeId> edge_set) {
  std::vector<Edge> edges;
  edges.reserve(edge_set.size());
  for (EdgeId e : edge_set) edges.push_back(g.edge(e));
  return Digraph(g.node_count(), std::move(edges));
}

std::vector<EdgeId> normalize_edge_set(std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

PathWitness make_path(const Digraph& g, NodeId source, std::vector<EdgeId> edges) {
  PathWitness p;
  NodeId at = source;
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw Error("path edge id out of range");
    const Edge& edge = g.edge(e);
    if (edge.tail != at) throw Error("path edges do not chain");
    p.cost = checked_add(p.cost, edge.cost);
    p.length = checked_add(p.length, edge.length);
    at = edge.head;
  }
  p.edges = std::move(edges);
  return p;
}

bool is_valid_path(const Digraph& g, const PathWitness& p, NodeId source, NodeId target) {
  NodeId at = source;
  Cost cost = 0;
  Length length = 0;
  for (EdgeId e : p.edges) {
    if (e >= g.edge_count() || g.edge(e).tail != at) return false;
    cost += g.edge(e).cost;
    length += g.edge(e).length;
    at = g.edge(e).head;
  }
  return at == target && cost == p.cost && length == p.length;
}

bool is_out_arborescence(const Digraph& g, const TreeSolution& t) {
  const std::size_t n = g.node_count();
  if (t.root >= n) return false;
  std::vector<EdgeId> parent(n, kNoEdge);
  for (EdgeId e : t.edges) {
    if (e >= g.edge_count()) return false;
    const Edge& edge = g.edge(e);
    if (edge.head == t.root || parent[edge.head] != kNoEdge) return false;
    parent[edge.head] = e;
  }
  // Walk every tree node up to the root; a cycle or a detached edge fails.
  std::vector<Distance> depth(n);
  depth[t.root] = 0;
  for (EdgeId e : t.edges) {
    std::vector<NodeId> chain;
    NodeId v = g.edge(e).head;
    while (!depth[v]) {
      if (parent[v] == kNoEdge || chain.size() > n) return false;
      chain.push_back(v);
      v = g.edge(parent[v]).tail;
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const Edge& pe = g.edge(parent[*it]);
      depth[*it] = *depth[pe.tail] + pe.length;
    }
  }
  Cost cost = 0;
  for (EdgeId e : t.edges) cost += g.edge(e).cost;
  if (cost != t.cost) return false;
  for (const auto& [terminal, dist] : t.terminal_distance) {
    if (terminal >= n || !depth[terminal] || *depth[terminal] != dist) return false;
  }
  return std::is_sorted(t.edges.begin(), t.edges.end());
}

}  // namespace slnet
