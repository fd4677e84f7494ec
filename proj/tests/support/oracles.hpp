#pragma once

// Independent reference computations used only by tests. None of these share
// code paths with the library routines they check.

#include <functional>
#include <optional>
#include <vector>

#include "slnet/graph.hpp"
#include "slnet/lp.hpp"

namespace slnet::testing {

/// Calls `visit(edges, cost, length)` for every simple u→v path (u == v gives
/// the empty path only).
void for_each_simple_path(const Digraph& g, NodeId u, NodeId v,
                          const std::function<void(const std::vector<EdgeId>&, Cost, Length)>& visit);

/// Cheapest simple path with length ≤ bound, by enumeration. Returns its cost.
std::optional<Cost> brute_force_rsp(const Digraph& g, NodeId u, NodeId v, double bound);

/// Lightest simple path with length ≤ bound under real weights.
std::optional<double> brute_force_min_weight(const Digraph& g, const std::vector<double>& w,
                                             NodeId u, NodeId v, Length bound);

/// Bellman–Ford single source lengths.
std::vector<Distance> bellman_ford(const Digraph& g, NodeId source);

/// Floyd–Warshall over an edge subset (all edges when `edges` is empty and
/// `use_all` is true).
std::vector<std::vector<Distance>> floyd_warshall(const Digraph& g, const std::vector<EdgeId>& edges,
                                                  bool use_all = false);

/// Dense LP  min c·x  s.t.  A x ≥ b,  0 ≤ x ≤ upper,  solved by enumerating
/// every vertex. Returns nullopt when infeasible.
std::optional<double> vertex_enumeration_lp(const std::vector<double>& c,
                                            const std::vector<std::vector<double>>& a,
                                            const std::vector<double>& b,
                                            const std::vector<double>& upper);

}  // namespace slnet::testing
