#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "slnet/graph.hpp"
#include "slnet/instance.hpp"

namespace slnet {

/// Ordered pair that must be joined by a path of length ≤ bound.
struct PairDemand {
  NodeId u = 0;
  NodeId v = 0;
  Length bound = 0;

  friend bool operator==(const PairDemand&, const PairDemand&) = default;
};

struct PathColumn {
  PathWitness path;
  double flow = 0.0;
};

struct FractionalSolution {
  std::vector<double> x;                         // per edge
  std::vector<std::vector<PathColumn>> columns;  // per demand
  double objective = 0.0;
  /// Lower bound on the LP optimum certified by the last pricing round.
  double dual_bound = 0.0;
  std::size_t rounds = 0;
};

/// Duals of the final restricted master. β is kept only where a generated
/// column put a coupling row; elsewhere it is zero.
struct DualSolution {
  std::vector<double> alpha;                    // per demand
  std::vector<std::map<EdgeId, double>> beta;   // per demand
};

struct LpParams {
  double eps = 0.1;
  std::size_t max_rounds = 10'000;
  double tolerance = 1e-6;
};

/// Path LP  min Σ c_e x_e  s.t.  Σ_P f_P ≥ 1 per demand,
/// Σ_{P∋e} f_P ≤ x_e per (edge, demand), by column generation. Pricing uses
/// the length-exact oracle, so every column respects its demand's bound.
/// Stops when pricing finds nothing below (1−a)·α with a = eps/(2+eps), or
/// earlier once the objective is within 1+eps of the best Lagrangian bound;
/// either way objective ≤ (1+eps)·LP optimum on return.
FractionalSolution solve_fractional(const Digraph& g, std::span<const PairDemand> demands,
                                    const LpParams& params, DualSolution* duals = nullptr);

/// Every ordered pair u ≠ v with ℓ̄(u,v) ≤ L.
std::vector<PairDemand> bounded_pair_demands(const Digraph& g, Length bound);
/// Every ordered pair u ≠ v reachable in G, with bound ⌊α·ℓ̄_G(u,v)⌋.
std::vector<PairDemand> stretch_demands(const Digraph& g, const Rational& stretch);

/// γ = √n·ln n (natural log, not rounded).
double rounding_gamma(std::size_t n);

/// Edge e is kept if γ·x_e ≥ 1, otherwise with probability γ·x_e, where
/// γ = rounding_gamma(n). One draw per edge in id order from a generator
/// seeded with `seed`.
std::vector<EdgeId> round_edges(std::span<const double> x, std::size_t n, std::uint64_t seed);

/// Demands whose shortest length inside the subgraph exceeds their bound.
std::vector<PairDemand> verify_settled(const Digraph& g, std::span<const EdgeId> subgraph,
                                       std::span<const PairDemand> demands);

}  // namespace slnet
