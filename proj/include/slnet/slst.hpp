#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "slnet/graph.hpp"
#include "slnet/instance.hpp"
#include "slnet/rsp.hpp"

namespace slnet {

struct SlstParams {
  int level = 2;
  double eps1 = 0.25;
  /// Terminals to cover; 0 means all of R.
  std::size_t k = 0;
  /// Optional pruning of the candidate loop (0 = off). Either one voids the
  /// approximation guarantee.
  std::size_t max_k_prime = 0;
  std::size_t max_rungs = 0;

  bool pruned() const { return max_k_prime != 0 || max_rungs != 0; }
};

/// Terminal bounds of a subproblem, sorted by node. Bounds become fractional
/// (and possibly negative) after subtracting a connection path.
using TerminalBounds = std::vector<std::pair<NodeId, double>>;

/// Edge union with the terminals it is guaranteed to serve.
struct PartialTree {
  std::vector<EdgeId> edges;    // sorted
  std::vector<NodeId> covered;  // sorted
  Cost cost = 0;

  bool empty() const { return covered.empty(); }
  /// ρ = cost / |covered|, +∞ when nothing is covered.
  double rho() const;
};

/// Recursive greedy solver. Path tables are shared between calls, so one
/// solver should serve every root on the same graph and eps1.
class ShallowLightSolver {
 public:
  ShallowLightSolver(const Digraph& g, const SlstParams& params);

  const Digraph& graph() const { return *g_; }
  const SlstParams& params() const { return params_; }

  /// Tree rooted at `root` covering at least k terminals, each within
  /// (1+eps1)·d(t). Empty iff fewer than k terminals have ℓ̄(root,t) ≤ d(t).
  std::optional<TreeSolution> solve(NodeId root, const TerminalBounds& bounds, std::size_t k);

  std::optional<PartialTree> shallow_light(int level, NodeId root, const TerminalBounds& bounds,
                                           std::size_t k);
  /// Minimum-ρ candidate over (v, k', rung); empty when none exists.
  PartialTree best_subtree(int level, NodeId root, const TerminalBounds& bounds, std::size_t k);
  std::optional<PartialTree> level_one(NodeId root, const TerminalBounds& bounds, std::size_t k);

  /// Rung bounds: 0, then ⌊(1+eps1)^j⌋ for j = 0..⌈log_{1+eps1} ℓ(E)⌉.
  const std::vector<Length>& ladder() const { return ladder_; }

  /// Shortest-length arborescence inside the union, pruned to the covered
  /// terminals; reports every terminal it serves within (1+eps1)·d(t).
  TreeSolution to_tree(NodeId root, const PartialTree& part, const TerminalBounds& bounds) const;

 private:
  struct Reachable {
    NodeId terminal;
    Cost cost;
    std::vector<EdgeId> path;
  };
  /// Terminals t with ℓ̄(v,t) ≤ d(t), cheapest relaxed path first (ties by id).
  std::vector<Reachable> level_one_paths(NodeId v, const TerminalBounds& bounds);
  const std::vector<Distance>& lengths_from(NodeId v);
  std::size_t feasible_count(NodeId v, const TerminalBounds& bounds);

  const Digraph* g_;
  SlstParams params_;
  RelaxedPathOracle oracle_;
  std::vector<Length> ladder_;
  std::vector<std::unique_ptr<std::vector<Distance>>> lengths_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

TerminalBounds to_terminal_bounds(const std::map<NodeId, Length>& bounds);

std::optional<TreeSolution> shallow_light(const SlstInstance& inst, const SlstParams& params);
PartialTree best_subtree(const SlstInstance& inst, const SlstParams& params);
std::optional<TreeSolution> level_one(const SlstInstance& inst, const SlstParams& params);

/// g(i,k) = 2i²(i−1)·k^{1/i} / 2^{1/i}, defined for i ≥ 2.
double ratio_bound(int i, double k);

}  // namespace slnet
