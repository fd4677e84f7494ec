#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "slnet/error.hpp"

namespace slnet {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Cost = std::uint64_t;
using Length = std::uint64_t;

/// Shortest-path length. `std::nullopt` is the unreachable sentinel; it is
/// never encoded as a large number.
using Distance = std::optional<Length>;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

/// a + b, throwing OverflowError instead of wrapping.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

struct Edge {
  NodeId tail = 0;
  NodeId head = 0;
  Cost cost = 0;
  Length length = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph with per-edge cost and length. Node ids are 0..n-1.
/// Immutable once constructed; adjacency lists are indexed by tail and head
/// and list edge ids in increasing order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(NodeId v) const;
  std::span<const EdgeId> in_edges(NodeId v) const;

  /// Sum of all edge lengths, ℓ(E). Checked for overflow.
  Length total_length() const { return total_length_; }
  Cost total_cost() const { return total_cost_; }

  /// Cost of an edge subset, each id counted once.
  Cost cost_of(std::span<const EdgeId> edge_set) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offset_, in_offset_;
  std::vector<EdgeId> out_index_, in_index_;
  Length total_length_ = 0;
  Cost total_cost_ = 0;
};

/// Every edge (u,v,c,ℓ) becomes (v,u,c,ℓ); edge ids are preserved.
Digraph reverse(const Digraph& g);

/// The spanning subgraph with the given edges. Edge ids are renumbered in the
/// order given; use `edge_set` sorted for a stable numbering.
Digraph spanning_subgraph(const Digraph& g, std::span<const EdgeId> edge_set);

/// Sorted, duplicate-free copy of `edges`.
std::vector<EdgeId> normalize_edge_set(std::vector<EdgeId> edges);

/// Ordered edge sequence with its totals.
struct PathWitness {
  std::vector<EdgeId> edges;
  Cost cost = 0;
  Length length = 0;

  bool empty() const { return edges.empty(); }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Builds a witness from an edge sequence starting at `source`, re-deriving
/// totals. Throws Error if consecutive edges do not chain.
PathWitness make_path(const Digraph& g, NodeId source, std::vector<EdgeId> edges);

/// True if the witness chains from `source` to `target` and its totals match.
bool is_valid_path(const Digraph& g, const PathWitness& p, NodeId source, NodeId target);

/// Out-arborescence rooted at `root` with the achieved tree distance of every
/// terminal it serves.
struct TreeSolution {
  NodeId root = 0;
  std::vector<EdgeId> edges;  // sorted
  std::map<NodeId, Length> terminal_distance;
  Cost cost = 0;

  std::size_t covered() const { return terminal_distance.size(); }
};

/// Checks in-degree ≤ 1, no edge entering the root, every edge reachable from
/// the root (hence acyclic), and that the recorded distances equal tree-path
/// lengths.
bool is_out_arborescence(const Digraph& g, const TreeSolution& t);

}  // namespace slnet
