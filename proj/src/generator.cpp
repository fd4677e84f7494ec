#include "slnet/generator.hpp"

#include <algorithm>
#include <numeric>

#include "slnet/random.hpp"
#include "slnet/shortest_paths.hpp"

namespace slnet {

namespace {

std::vector<NodeId> shuffled(Rng& rng, std::size_t n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
  return order;
}

}  // namespace

Digraph generate_graph(const GraphShape& shape, Length backbone_cap) {
  if (shape.n < 2) throw UnsatisfiableParams("need at least 2 nodes");
  if (shape.m < shape.n) throw UnsatisfiableParams("need m ≥ n for the backbone cycle");
  if (shape.max_cost < 1 || shape.max_length < 1) {
    throw UnsatisfiableParams("max_cost and max_length must be positive");
  }
  if (backbone_cap < 1) throw UnsatisfiableParams("backbone edges cannot have length 0");

  Rng rng(shape.seed);
  const std::vector<NodeId> order = shuffled(rng, shape.n);
  const Length cap = std::min(backbone_cap, shape.max_length);
  std::vector<Edge> edges;
  edges.reserve(shape.m);
  for (std::size_t i = 0; i < shape.n; ++i) {
    edges.push_back({order[i], order[(i + 1) % shape.n], rng.uniform(1, shape.max_cost),
                     rng.uniform(1, cap)});
  }
  while (edges.size() < shape.m) {
    const auto u = static_cast<NodeId>(rng.uniform(0, shape.n - 1));
    const auto v = static_cast<NodeId>(rng.uniform(0, shape.n - 1));
    if (u == v) continue;
    edges.push_back({u, v, rng.uniform(1, shape.max_cost), rng.uniform(1, shape.max_length)});
  }
  return Digraph(shape.n, std::move(edges));
}

NdbdInstance generate_ndbd(const GraphShape& shape, Length bound) {
  if (bound < shape.n) {
    throw UnsatisfiableParams("L = " + std::to_string(bound) + " is below the shortest possible backbone (" +
                              std::to_string(shape.n) + ")");
  }
  return NdbdInstance{generate_graph(shape, bound / shape.n), bound};
}

SpannerInstance generate_spanner(const GraphShape& shape, Rational stretch) {
  if (stretch.num < stretch.den) throw UnsatisfiableParams("stretch must be at least 1");
  return SpannerInstance{generate_graph(shape, shape.max_length), stretch};
}

SlstInstance generate_slst(const GraphShape& shape, std::size_t terminals, Rational slack) {
  if (slack.num < slack.den) throw UnsatisfiableParams("bound multiplier must be at least 1");
  if (terminals + 1 > shape.n) throw UnsatisfiableParams("more terminals than non-root nodes");
  SlstInstance inst;
  inst.graph = generate_graph(shape, shape.max_length);
  // Separate stream, so the graph equals generate_graph for the same seed.
  Rng rng(shape.seed ^ 0xD1B54A32D192ED03ull);
  const std::vector<NodeId> order = shuffled(rng, shape.n);
  inst.root = order[0];
  const auto dist = shortest_lengths_from(inst.graph, inst.root);
  for (std::size_t i = 1; i <= terminals; ++i) inst.bounds[order[i]] = slack.floor_times(*dist[order[i]]);
  return inst;
}

}  // namespace slnet
