#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "slnet/graph.hpp"
#include "slnet/slst.hpp"

namespace slnet {

struct SampleConfig {
  std::size_t delta = 0;  // 0: ⌈3√n·ln n⌉
  std::uint64_t seed = 0;
};

/// ⌈3√n·ln n⌉ clamped to [1, n].
std::size_t default_delta(std::size_t n);

/// min(δ, n) distinct nodes drawn uniformly without replacement, sorted.
std::vector<NodeId> sample_roots(std::size_t n, const SampleConfig& cfg);

/// Out-tree from the root and in-tree into it. The in-tree is built on the
/// reversed graph; its edge ids are the original ones and its distances run
/// from each terminal to the root.
struct RootTrees {
  NodeId root = 0;
  TreeSolution out;
  TreeSolution in;
};

/// Builds root trees on one graph, sharing path tables across roots. Not
/// safe for concurrent use; give each worker its own builder.
class RootTreeBuilder {
 public:
  RootTreeBuilder(const Digraph& g, const SlstParams& params);

  /// `out_bounds[t]` bounds root→t, `in_bounds[t]` bounds t→root; every
  /// listed terminal must be covered. Throws InfeasibleInstance otherwise.
  RootTrees build(NodeId root, const TerminalBounds& out_bounds, const TerminalBounds& in_bounds);

 private:
  Digraph reversed_;
  ShallowLightSolver forward_;
  ShallowLightSolver backward_;
};

RootTrees build_root_trees(const Digraph& g, NodeId root, const TerminalBounds& out_bounds,
                           const TerminalBounds& in_bounds, const SlstParams& params);

/// Union of all tree edges, sorted and duplicate-free.
std::vector<EdgeId> union_thick(const std::vector<RootTrees>& trees);

enum class PairClass { kThin, kThick, kUnknown, kUnsatisfiable };
const char* to_string(PairClass c);

struct PairClassification {
  PairClass kind = PairClass::kUnknown;
  std::size_t witness_nodes = 0;  // |W_uv|
};

/// Diagnostic only. W_uv = {w : ℓ̄(u,w) + ℓ̄(w,v) ≤ L} contains V_uv; a pair
/// is thin when |W_uv| ≤ √n, thick when √n nodes of W_uv are confirmed to
/// lie on simple u→v paths of length ≤ L, unknown otherwise.
std::vector<std::vector<PairClassification>> classify_pairs_diagnostic(const Digraph& g, Length bound);

}  // namespace slnet
