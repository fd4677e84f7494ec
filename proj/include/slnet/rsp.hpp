#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "slnet/graph.hpp"

namespace slnet {

inline constexpr std::uint64_t kDefaultExactCells = 1'000'000;
inline constexpr std::uint64_t kDefaultScaledCells = 50'000'000;

/// Single-source dynamic program over (budget, node). Each edge consumes an
/// integer `step` of budget and adds `objective`; cell (b, v) holds the
/// lexicographically smallest (objective, edge count) over u→v walks whose
/// steps sum to at most b. Equal labels keep the first predecessor found.
/// Layers are built on demand, so a table answers every budget up to the
/// largest one requested.
class BudgetedPathTable {
 public:
  struct Cell {
    std::uint64_t objective = kUnreached;
    std::uint32_t edges = 0;
    EdgeId pred = kNoEdge;
  };
  static constexpr std::uint64_t kUnreached = UINT64_MAX;

  BudgetedPathTable(const Digraph& g, NodeId source, std::vector<std::uint64_t> step,
                    std::vector<std::uint64_t> objective);

  NodeId source() const { return source_; }
  /// Number of layers built so far (budgets 0..layers()-1).
  std::uint64_t layers() const { return layers_; }
  void extend_to(std::uint64_t budget);

  const Cell& cell(std::uint64_t budget, NodeId v) const { return cells_[budget * n_ + v]; }
  std::vector<EdgeId> path(std::uint64_t budget, NodeId v) const;

 private:
  void build_layer(std::uint64_t b);

  const Digraph* g_;
  NodeId source_;
  std::size_t n_;
  std::vector<std::uint64_t> step_, objective_;
  std::vector<EdgeId> positive_edges_;  // non-loop edges with step > 0, id order
  bool has_zero_step_ = false;
  std::uint64_t layers_ = 0;
  std::vector<Cell> cells_;
};

/// Minimum-cost u→v path of length ≤ bound by the exact pseudo-polynomial DP.
/// Bounds above ℓ(E) are clamped. Throws BudgetTooLarge when the table would
/// exceed `max_cells` cells.
std::optional<PathWitness> rsp_exact(const Digraph& g, NodeId u, NodeId v, Length bound,
                                     std::uint64_t max_cells = kDefaultExactCells);

/// Length-relaxed, cost-exact variant: length ≤ (1+eps)·bound and cost no
/// larger than the cheapest path of length ≤ bound. An empty result means no
/// path of length ≤ bound exists; the converse need not hold.
std::optional<PathWitness> min_cost_path_relaxed(const Digraph& g, NodeId u, NodeId v,
                                                 Length bound, double eps,
                                                 std::uint64_t max_cells = kDefaultScaledCells);

struct WeightedPath {
  PathWitness path;
  double weight = 0.0;
};

/// Length-exact, weight-approximate variant under nonnegative real weights:
/// length ≤ bound and weight ≤ (1+eps)·(lightest path of length ≤ bound).
std::optional<WeightedPath> min_weight_path_hassin(const Digraph& g, std::span<const double> weights,
                                                   NodeId u, NodeId v, Length bound, double eps,
                                                   std::uint64_t max_cells = kDefaultScaledCells);

/// Memoized min_cost_path_relaxed for many queries on one graph. Answers are
/// identical to the free function. Safe for concurrent use.
class RelaxedPathOracle {
 public:
  RelaxedPathOracle(const Digraph& g, double eps, std::uint64_t max_cells = kDefaultScaledCells);

  const Digraph& graph() const { return *g_; }
  double eps() const { return eps_; }

  /// Cost of the answer, without materializing the path.
  std::optional<Cost> cost(NodeId u, NodeId v, Length bound);
  std::optional<PathWitness> path(NodeId u, NodeId v, Length bound);

 private:
  struct Lookup {
    std::shared_ptr<BudgetedPathTable> table;
    std::uint64_t budget = 0;
  };
  Lookup lookup(NodeId u, Length bound);

  const Digraph* g_;
  double eps_;
  std::uint64_t max_cells_;
  std::uint64_t exact_budget_;  // T = ⌈(n-1)/eps⌉
  std::mutex mutex_;
  std::map<NodeId, std::shared_ptr<BudgetedPathTable>> unconstrained_, exact_;
  std::map<std::pair<NodeId, Length>, std::shared_ptr<BudgetedPathTable>> scaled_;
};

}  // namespace slnet
