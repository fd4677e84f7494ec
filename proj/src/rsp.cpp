#include "slnet/rsp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "slnet/shortest_paths.hpp"

namespace slnet {

namespace {

constexpr EdgeId kInherit = kNoEdge - 1;

bool better(std::uint64_t obj, std::uint32_t edges, const BudgetedPathTable::Cell& c) {
  return obj < c.objective || (obj == c.objective && edges < c.edges);
}

void check_cells(std::uint64_t budget, std::size_t n, std::uint64_t max_cells) {
  const unsigned __int128 cells = static_cast<unsigned __int128>(budget + 1) * n;
  if (budget == UINT64_MAX || cells > max_cells) {
    throw BudgetTooLarge("path table needs " + std::to_string(static_cast<double>(cells)) +
                         " cells, cap is " + std::to_string(max_cells));
  }
}

std::vector<std::uint64_t> costs_of(const Digraph& g) {
  std::vector<std::uint64_t> c(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) c[e] = g.edge(e).cost;
  return c;
}

std::vector<std::uint64_t> lengths_of(const Digraph& g) {
  std::vector<std::uint64_t> l(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) l[e] = g.edge(e).length;
  return l;
}

/// Budget T of the relaxed variant: any simple path has at most n-1 edges,
/// so rounding each scaled length down loses less than n-1 ≤ eps·T units.
std::uint64_t relaxed_budget(std::size_t n, double eps) {
  if (!(eps > 0)) throw Error("eps must be positive");
  const double t = std::ceil(static_cast<double>(n > 1 ? n - 1 : 1) / eps);
  if (t >= 1e18) throw BudgetTooLarge("eps too small");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(t));
}

enum class RelaxedMode { kUnconstrained, kExact, kScaled };

RelaxedMode relaxed_mode(const Digraph& g, Length bound, std::uint64_t t) {
  if (bound >= g.total_length()) return RelaxedMode::kUnconstrained;
  if (bound <= t) return RelaxedMode::kExact;
  return RelaxedMode::kScaled;
}

std::vector<std::uint64_t> scaled_lengths(const Digraph& g, Length bound, std::uint64_t t) {
  std::vector<std::uint64_t> s(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const unsigned __int128 x = static_cast<unsigned __int128>(g.edge(e).length) * t / bound;
    s[e] = x > t ? t + 1 : static_cast<std::uint64_t>(x);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// BudgetedPathTable

BudgetedPathTable::BudgetedPathTable(const Digraph& g, NodeId source, std::vector<std::uint64_t> step,
                                     std::vector<std::uint64_t> objective)
    : g_(&g), source_(source), n_(g.node_count()), step_(std::move(step)),
      objective_(std::move(objective)) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) continue;
    if (step_[e] == 0) {
      has_zero_step_ = true;
    } else {
      positive_edges_.push_back(e);
    }
  }
  extend_to(0);
}

void BudgetedPathTable::extend_to(std::uint64_t budget) {
  if (budget < layers_) return;
  cells_.resize((budget + 1) * n_);
  for (std::uint64_t b = layers_; b <= budget; ++b) build_layer(b);
  layers_ = budget + 1;
}

void BudgetedPathTable::build_layer(std::uint64_t b) {
  Cell* layer = &cells_[b * n_];
  if (b == 0) {
    layer[source_] = Cell{0, 0, kNoEdge};
  } else {
    const Cell* prev = &cells_[(b - 1) * n_];
    for (std::size_t v = 0; v < n_; ++v) {
      layer[v] = prev[v];
      if (prev[v].edges > 0) layer[v].pred = kInherit;
    }
    for (EdgeId e : positive_edges_) {
      if (step_[e] > b) continue;
      const Edge& ed = g_->edge(e);
      const Cell& from = cells_[(b - step_[e]) * n_ + ed.tail];
      if (from.objective == kUnreached) continue;
      const std::uint64_t obj = from.objective + objective_[e];
      if (better(obj, from.edges + 1, layer[ed.head])) layer[ed.head] = Cell{obj, from.edges + 1, e};
    }
  }
  if (!has_zero_step_) return;

  // Zero-step edges stay inside the layer: Dijkstra seeded with every label.
  using Item = std::tuple<std::uint64_t, std::uint32_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (std::size_t v = 0; v < n_; ++v) {
    if (layer[v].objective != kUnreached) heap.emplace(layer[v].objective, layer[v].edges, v);
  }
  while (!heap.empty()) {
    const auto [obj, edges, v] = heap.top();
    heap.pop();
    if (obj != layer[v].objective || edges != layer[v].edges) continue;
    for (EdgeId e : g_->out_edges(v)) {
      if (step_[e] != 0) continue;
      const Edge& ed = g_->edge(e);
      if (ed.is_loop()) continue;
      const std::uint64_t cand = obj + objective_[e];
      if (better(cand, edges + 1, layer[ed.head])) {
        layer[ed.head] = Cell{cand, edges + 1, e};
        heap.emplace(cand, edges + 1, ed.head);
      }
    }
  }
}

std::vector<EdgeId> BudgetedPathTable::path(std::uint64_t budget, NodeId v) const {
  std::vector<EdgeId> out;
  if (cell(budget, v).objective == kUnreached) return out;
  while (cell(budget, v).edges > 0) {
    const EdgeId e = cell(budget, v).pred;
    if (e == kInherit) {
      --budget;
      continue;
    }
    out.push_back(e);
    budget -= step_[e];
    v = g_->edge(e).tail;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exact and relaxed queries

std::optional<PathWitness> rsp_exact(const Digraph& g, NodeId u, NodeId v, Length bound,
                                     std::uint64_t max_cells) {
  bound = std::min(bound, g.total_length());
  check_cells(bound, g.node_count(), max_cells);
  BudgetedPathTable table(g, u, lengths_of(g), costs_of(g));
  table.extend_to(bound);
  if (table.cell(bound, v).objective == BudgetedPathTable::kUnreached) return std::nullopt;
  return make_path(g, u, table.path(bound, v));
}

std::optional<PathWitness> min_cost_path_relaxed(const Digraph& g, NodeId u, NodeId v,
                                                 Length bound, double eps,
                                                 std::uint64_t max_cells) {
  RelaxedPathOracle oracle(g, eps, max_cells);
  return oracle.path(u, v, bound);
}

RelaxedPathOracle::RelaxedPathOracle(const Digraph& g, double eps, std::uint64_t max_cells)
    : g_(&g), eps_(eps), max_cells_(max_cells), exact_budget_(relaxed_budget(g.node_count(), eps)) {}

RelaxedPathOracle::Lookup RelaxedPathOracle::lookup(NodeId u, Length bound) {
  std::lock_guard lock(mutex_);
  const Digraph& g = *g_;
  switch (relaxed_mode(g, bound, exact_budget_)) {
    case RelaxedMode::kUnconstrained: {
      auto& slot = unconstrained_[u];
      if (!slot) {
        slot = std::make_shared<BudgetedPathTable>(
            g, u, std::vector<std::uint64_t>(g.edge_count(), 0), costs_of(g));
      }
      return {slot, 0};
    }
    case RelaxedMode::kExact: {
      auto& slot = exact_[u];
      if (!slot) {
        // One table answers every bound up to min(T, ℓ(E)).
        const std::uint64_t top = std::min(exact_budget_, g.total_length());
        check_cells(top, g.node_count(), max_cells_);
        slot = std::make_shared<BudgetedPathTable>(g, u, lengths_of(g), costs_of(g));
        slot->extend_to(top);
      }
      return {slot, bound};
    }
    case RelaxedMode::kScaled: {
      auto& slot = scaled_[{u, bound}];
      if (!slot) {
        check_cells(exact_budget_, g.node_count(), max_cells_);
        slot = std::make_shared<BudgetedPathTable>(g, u, scaled_lengths(g, bound, exact_budget_),
                                                   costs_of(g));
        slot->extend_to(exact_budget_);
      }
      return {slot, exact_budget_};
    }
  }
  return {};
}

std::optional<Cost> RelaxedPathOracle::cost(NodeId u, NodeId v, Length bound) {
  if (u == v) return Cost{0};
  const Lookup l = lookup(u, bound);
  const auto& c = l.table->cell(l.budget, v);
  if (c.objective == BudgetedPathTable::kUnreached) return std::nullopt;
  return c.objective;
}

std::optional<PathWitness> RelaxedPathOracle::path(NodeId u, NodeId v, Length bound) {
  if (u == v) return PathWitness{};
  const Lookup l = lookup(u, bound);
  if (l.table->cell(l.budget, v).objective == BudgetedPathTable::kUnreached) return std::nullopt;
  return make_path(*g_, u, l.table->path(l.budget, v));
}

// ---------------------------------------------------------------------------
// Weight-approximate, length-exact variant

namespace {

struct WeightLabel {
  double weight;
  Length length;
  std::uint32_t edges;
};

bool lighter(const WeightLabel& a, const WeightLabel& b) {
  return std::tie(a.weight, a.length, a.edges) < std::tie(b.weight, b.length, b.edges);
}

/// Lexicographic (weight, length, edges) Dijkstra; returns the u→v path.
std::optional<std::vector<EdgeId>> lightest_path(const Digraph& g, std::span<const double> w,
                                                 NodeId u, NodeId v) {
  const std::size_t n = g.node_count();
  std::vector<std::optional<WeightLabel>> label(n);
  std::vector<EdgeId> parent(n, kNoEdge);
  std::vector<char> done(n, 0);
  using Item = std::pair<WeightLabel, NodeId>;
  auto cmp = [](const Item& a, const Item& b) { return lighter(b.first, a.first); };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  label[u] = WeightLabel{0.0, 0, 0};
  heap.emplace(*label[u], u);
  while (!heap.empty()) {
    const NodeId x = heap.top().second;
    heap.pop();
    if (done[x]) continue;
    done[x] = 1;
    if (x == v) break;
    for (EdgeId e : g.out_edges(x)) {
      const Edge& ed = g.edge(e);
      if (ed.is_loop() || done[ed.head]) continue;
      const WeightLabel cand{label[x]->weight + w[e], label[x]->length + ed.length,
                             label[x]->edges + 1};
      if (!label[ed.head] || lighter(cand, *label[ed.head])) {
        label[ed.head] = cand;
        parent[ed.head] = e;
        heap.emplace(cand, ed.head);
      }
    }
  }
  if (!label[v]) return std::nullopt;
  std::vector<EdgeId> path;
  for (NodeId x = v; x != u; x = g.edge(parent[x]).tail) path.push_back(parent[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Shortest-length u→v path using only edges with weight ≤ threshold.
std::optional<std::vector<EdgeId>> shortest_below(const Digraph& g, std::span<const double> w,
                                                  double threshold, NodeId u, NodeId v,
                                                  Length bound) {
  std::vector<char> allowed(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) allowed[e] = w[e] <= threshold;
  const ShortestPathTree spt = shortest_path_tree(g, u, allowed);
  if (!spt.distance[v] || *spt.distance[v] > bound) return std::nullopt;
  return tree_path(g, spt, v);
}

double weight_of(std::span<const double> w, const std::vector<EdgeId>& p) {
  double s = 0;
  for (EdgeId e : p) s += w[e];
  return s;
}

/// Scaled weights ⌊w/θ⌋ as budget steps, lengths as objective. Returns the
/// path found at the smallest budget ≤ limit whose length fits, if any.
std::optional<std::vector<EdgeId>> scaled_search(const Digraph& g, std::span<const double> w,
                                                 double theta, std::uint64_t limit, NodeId u,
                                                 NodeId v, Length bound, std::uint64_t max_cells) {
  check_cells(limit, g.node_count(), max_cells);
  std::vector<std::uint64_t> step(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double s = std::floor(w[e] / theta);
    step[e] = s > static_cast<double>(limit) ? limit + 1 : static_cast<std::uint64_t>(s);
  }
  BudgetedPathTable table(g, u, std::move(step), lengths_of(g));
  for (std::uint64_t b = 0; b <= limit; ++b) {
    table.extend_to(b);
    if (table.cell(b, v).objective <= bound) return table.path(b, v);
  }
  return std::nullopt;
}

}  // namespace

std::optional<WeightedPath> min_weight_path_hassin(const Digraph& g, std::span<const double> weights,
                                                   NodeId u, NodeId v, Length bound, double eps,
                                                   std::uint64_t max_cells) {
  if (!(eps > 0)) throw Error("eps must be positive");
  if (weights.size() != g.edge_count()) throw Error("weight vector size mismatch");
  for (double x : weights) {
    if (!(x >= 0) || !std::isfinite(x)) throw Error("weights must be finite and nonnegative");
  }
  if (u == v) return WeightedPath{};

  auto finish = [&](const std::vector<EdgeId>& p) {
    return WeightedPath{make_path(g, u, p), weight_of(weights, p)};
  };

  // The unconstrained lightest path is optimal whenever it fits the bound,
  // and its weight is a lower bound otherwise.
  const auto light = lightest_path(g, weights, u, v);
  if (!light) return std::nullopt;
  const double lower_from_light = weight_of(weights, *light);
  if (make_path(g, u, *light).length <= bound) return finish(*light);

  // Bottleneck: the smallest threshold admitting a length-feasible path.
  std::vector<double> levels(weights.begin(), weights.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (!shortest_below(g, weights, levels.back(), u, v, bound)) return std::nullopt;
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (shortest_below(g, weights, levels[mid], u, v, bound)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const double bottleneck = levels[lo];
  std::vector<EdgeId> best = *shortest_below(g, weights, bottleneck, u, v, bound);
  double best_weight = weight_of(weights, best);
  if (bottleneck == 0.0) return finish(best);

  // Any length-feasible path weighs at least the bottleneck and the
  // bottleneck path has at most n-1 edges.
  const double paths = static_cast<double>(g.node_count() - 1);
  double lower = std::max(bottleneck, lower_from_light);
  double upper = best_weight;

  // Narrow [lower, upper] with coarse tests: a search with θ = C/(n-1) and
  // budget n-1 either proves OPT > C or finds a path lighter than 2C.
  while (upper > 5.0 * lower) {
    const double c = std::sqrt(lower * upper);
    const auto found =
        scaled_search(g, weights, c / paths, g.node_count() - 1, u, v, bound, max_cells);
    if (!found) {
      lower = c;
      continue;
    }
    const double w = weight_of(weights, *found);
    if (w < best_weight) {
      best = *found;
      best_weight = w;
    }
    upper = std::min(upper, w);
  }

  const double theta = eps * lower / paths;
  const double steps = std::floor(upper / theta);
  if (steps * static_cast<double>(g.node_count()) > static_cast<double>(max_cells)) {
    throw BudgetTooLarge("weight scaling needs more than " + std::to_string(max_cells) + " cells");
  }
  const auto found = scaled_search(g, weights, theta, static_cast<std::uint64_t>(steps), u, v,
                                   bound, max_cells);
  if (found) {
    const double w = weight_of(weights, *found);
    if (w < best_weight) {
      best = *found;
      best_weight = w;
    }
  }
  return finish(best);
}

}  // namespace slnet
