#pragma once

#include <cstdint>

#include "slnet/graph.hpp"
#include "slnet/instance.hpp"
#include "slnet/random.hpp"

namespace slnet::testing {

/// Random digraph with `m` edges drawn uniformly (self-loops excluded,
/// parallel edges allowed).
Digraph random_digraph(Rng& rng, std::size_t n, std::size_t m, Cost max_cost, Length max_length);

/// Random digraph that is strongly connected through a Hamiltonian cycle
/// 0 → 1 → … → n−1 → 0 plus `extra` random edges.
Digraph random_strong_digraph(Rng& rng, std::size_t n, std::size_t extra, Cost max_cost,
                              Length max_length);

/// SLST instance rooted at 0 with `k` terminals whose bounds are a random
/// multiple in [1, 2] of their distance from the root. Terminals unreachable
/// from the root are skipped.
SlstInstance random_slst(Rng& rng, const Digraph& g, std::size_t k);

}  // namespace slnet::testing
