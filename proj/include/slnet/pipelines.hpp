#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slnet/graph.hpp"
#include "slnet/instance.hpp"

namespace slnet {

struct SolveParams {
  /// User-facing ε. NDBD and spanner runs solve the LP to within 1+ε and
  /// build trees with slack eps1 = ε/2; standalone SLST uses eps1 = ε.
  double eps = 0.25;
  int level = 2;
  std::uint64_t seed = 1;
  std::size_t delta = 0;  // 0: ⌈3√n·ln n⌉ clamped to n
  std::size_t max_k_prime = 0;
  std::size_t max_rungs = 0;
  std::size_t lp_max_rounds = 10'000;
  /// Timings are off by default so that reports are byte-reproducible.
  bool record_timings = false;
  std::size_t workers = 0;  // 0: worker_count()

  double eps_lp() const { return eps; }
  double eps1() const { return eps / 2; }
};

/// d / bound with the conventions 0/0 = 0 and x/0 = ∞ for x > 0; ∞ (also
/// for unreachable pairs) is nullopt.
std::optional<double> violation_factor(Distance d, double bound);

struct PairViolation {
  NodeId u = 0;
  NodeId v = 0;
  double bound = 0;  // L, α·ℓ̄_G(u,v) or d(t)
  Distance distance;
  std::optional<double> factor;
};

struct Verification {
  bool ok = true;
  double allowed = 1.0;                    // admissible violation factor
  std::optional<double> worst_violation = 0.0;  // nullopt: some pair unreachable
  std::size_t settled_pairs = 0;           // factor ≤ 1
  std::size_t total_pairs = 0;
  std::vector<PairViolation> offending;    // factor > allowed
};

/// Recomputes every constrained distance in H (all ordered pairs for NDBD
/// and spanners, root→terminal for SLST) and compares against the
/// instance's own bound with slack factor `allowed`. For SLST, H must also be
/// an out-arborescence rooted at r.
Verification verify_solution(const Instance& inst, std::span<const EdgeId> edges, double allowed);

struct RunReport {
  std::string kind;
  std::string instance;  // one-line descriptor
  SolveParams params;
  std::optional<double> gamma;
  std::optional<std::size_t> delta;
  std::vector<EdgeId> edges;  // sorted
  Cost cost = 0;
  Verification verification;
  std::vector<std::pair<std::string, double>> timings_ms;

  // Stage details (NDBD and spanner).
  double lp_objective = 0;
  double lp_dual_bound = 0;
  std::size_t lp_rounds = 0;
  std::size_t lp_columns = 0;
  std::vector<EdgeId> rounded_edges;  // H1
  std::vector<EdgeId> thick_edges;    // H2
  std::vector<NodeId> roots;
  /// Spanners only: max ℓ̄_H(u,v)/ℓ̄_G(u,v); nullopt if some pair is cut off.
  std::optional<double> worst_stretch;

  // SLST details.
  std::map<NodeId, Length> terminal_distance;
  std::map<NodeId, Length> terminal_bound;
  std::optional<NodeId> root;
};

/// Throws InfeasibleInstance if G itself violates L.
RunReport solve_ndbd(const NdbdInstance& inst, const SolveParams& params);
RunReport solve_spanner(const SpannerInstance& inst, const SolveParams& params);
/// k = 0 covers every terminal. Throws InfeasibleInstance when fewer than k
/// terminals can meet their bounds.
RunReport solve_slst(const SlstInstance& inst, const SolveParams& params, std::size_t k = 0);

/// Slack factor each pipeline guarantees: 2(1+eps1) for NDBD, α(1+eps1)
/// relative to α·ℓ̄_G for spanners, 1+eps for SLST.
double guaranteed_factor(const Instance& inst, const SolveParams& params);

std::string describe(const Instance& inst);

/// Canonical JSON with a trailing newline.
std::string write_report(const RunReport& report);

}  // namespace slnet
