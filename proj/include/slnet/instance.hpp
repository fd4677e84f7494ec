#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "slnet/graph.hpp"

namespace slnet {

/// Positive rational num/den in lowest terms.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// ⌊this · x⌋, exact.
  std::uint64_t floor_times(std::uint64_t x) const;
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Network design with a global length bound L on every ordered pair.
struct NdbdInstance {
  Digraph graph;
  Length bound = 0;
};

/// Shallow-light Steiner tree: root, terminals and their distance bounds.
struct SlstInstance {
  Digraph graph;
  NodeId root = 0;
  std::map<NodeId, Length> bounds;  // terminal -> d(t); keys form R
};

/// Light-weight directed spanner with stretch α ≥ 1.
struct SpannerInstance {
  Digraph graph;
  Rational stretch;
};

using Instance = std::variant<NdbdInstance, SlstInstance, SpannerInstance>;

/// True iff every ordered pair (u,v), u ≠ v, has ℓ̄_G(u,v) ≤ L.
bool check_feasible(const NdbdInstance& inst);

}  // namespace slnet
