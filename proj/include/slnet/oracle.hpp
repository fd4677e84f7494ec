#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "slnet/graph.hpp"
#include "slnet/instance.hpp"

namespace slnet {

inline constexpr std::size_t kDslstEdgeCap = 20;
inline constexpr std::size_t kSubgraphEdgeCap = 16;

struct Subgraph {
  std::vector<EdgeId> edges;  // sorted
  Cost cost = 0;
};

/// Visits edge subsets in nondecreasing total cost (ties: fewer edges, then
/// smaller index mask over the cost-sorted order) and returns the first one
/// `accept` takes. `accept` sees a 0/1 mask indexed by edge id. Throws
/// CapExceeded when m > cap.
std::optional<Subgraph> first_subset_by_cost(const Digraph& g, std::size_t cap,
                                             const std::function<bool(std::span<const char>)>& accept);

/// Cheapest r-rooted out-arborescence in which at least k terminals meet
/// their bounds exactly. Empty iff no such tree exists.
std::optional<TreeSolution> exact_dslst(const SlstInstance& inst, std::size_t k);

/// Cheapest spanning subgraph with every ordered pair within L.
std::optional<Subgraph> exact_ndbd(const NdbdInstance& inst);

/// Cheapest spanning subgraph with ℓ̄_H(u,v) ≤ α·ℓ̄_G(u,v) for every pair
/// reachable in G.
Subgraph exact_spanner(const SpannerInstance& inst);

}  // namespace slnet
