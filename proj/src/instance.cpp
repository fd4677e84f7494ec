#include "slnet/instance.hpp"

#include <numeric>

#include "slnet/shortest_paths.hpp"

namespace slnet {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den <= 0 || num <= 0) throw Error("rational must be positive: " + str());
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
}

std::uint64_t Rational::floor_times(std::uint64_t x) const {
  const unsigned __int128 p = static_cast<unsigned __int128>(x) * static_cast<std::uint64_t>(num);
  const unsigned __int128 q = p / static_cast<std::uint64_t>(den);
  if (q > std::numeric_limits<std::uint64_t>::max()) throw OverflowError("stretch bound overflow");
  return static_cast<std::uint64_t>(q);
}

bool check_feasible(const NdbdInstance& inst) {
  for (NodeId u = 0; u < inst.graph.node_count(); ++u) {
    for (const Distance& d : shortest_lengths_from(inst.graph, u)) {
      if (!d || *d > inst.bound) return false;
    }
  }
  return true;
}

}  // namespace slnet
