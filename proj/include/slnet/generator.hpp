#pragma once

#include <cstdint>

#include "slnet/instance.hpp"

namespace slnet {

struct GraphShape {
  std::size_t n = 0;
  std::size_t m = 0;  // ≥ n; the first n edges form the backbone cycle
  Cost max_cost = 10;
  Length max_length = 10;
  std::uint64_t seed = 1;
};

/// Strongly connected graph: a Hamiltonian cycle over a random node order,
/// then m − n random non-loop edges. Costs are drawn from [1, max_cost],
/// lengths from [1, max_length]; backbone lengths are additionally capped at
/// `backbone_cap`. Throws UnsatisfiableParams if n < 2, m < n or the cap is 0.
Digraph generate_graph(const GraphShape& shape, Length backbone_cap);

/// Feasible by construction: backbone lengths are capped at ⌊L/n⌋, so the
/// cycle, and with it every ordered pair, fits within L. Throws
/// UnsatisfiableParams when L < n, i.e. no backbone can fit.
NdbdInstance generate_ndbd(const GraphShape& shape, Length bound);

/// Requires stretch ≥ 1.
SpannerInstance generate_spanner(const GraphShape& shape, Rational stretch);

/// Random root and `terminals` distinct terminals; each bound is
/// ⌊c·ℓ̄(r,t)⌋ with c ≥ 1, so every terminal is reachable in time.
SlstInstance generate_slst(const GraphShape& shape, std::size_t terminals, Rational slack);

}  // namespace slnet
