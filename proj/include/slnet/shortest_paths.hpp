#pragma once

#include <span>
#include <vector>

#include "slnet/graph.hpp"

namespace slnet {

using DistanceMatrix = std::vector<std::vector<Distance>>;

/// Exact single-source shortest lengths under ℓ (Dijkstra).
std::vector<Distance> shortest_lengths_from(const Digraph& g, NodeId source);

/// Exact shortest lengths from every node to `target`.
std::vector<Distance> shortest_lengths_to(const Digraph& g, NodeId target);

/// `result[u][v]` = ℓ̄(u,v).
DistanceMatrix all_pairs_lengths(const Digraph& g);

/// Shortest-path tree from `root` using only edges with `allowed[e]`
/// (all edges when `allowed` is empty). Ties in length go to the cheaper
/// label, then to the first edge relaxed. `parent[v]` is kNoEdge for the root
/// and unreachable nodes.
struct ShortestPathTree {
  std::vector<Distance> distance;
  std::vector<EdgeId> parent;
};
ShortestPathTree shortest_path_tree(const Digraph& g, NodeId root,
                                    std::span<const char> allowed = {});

/// Edge sequence from the tree root to `v`; empty for the root itself.
std::vector<EdgeId> tree_path(const Digraph& g, const ShortestPathTree& spt, NodeId v);

}  // namespace slnet
