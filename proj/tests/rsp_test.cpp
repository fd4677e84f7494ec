#include <gtest/gtest.h>

#include <cmath>

#include "slnet/rsp.hpp"
#include "slnet/shortest_paths.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace slnet {
namespace {

// 1→2 (c1, ℓ2), 2→3 (c1, ℓ2), 1→3 (c5, ℓ1), zero-based.
Digraph g1() { return Digraph(3, {{0, 1, 1, 2}, {1, 2, 1, 2}, {0, 2, 5, 1}}); }

std::vector<double> costs_as_weights(const Digraph& g) {
  std::vector<double> w;
  for (const Edge& e : g.edges()) w.push_back(static_cast<double>(e.cost));
  return w;
}

TEST(RspExact, WorkedExamples) {
  const Digraph g = g1();
  EXPECT_EQ(shortest_lengths_from(g, 0), (std::vector<Distance>{0, 2, 1}));
  EXPECT_EQ(rsp_exact(g, 0, 2, 2)->cost, 5u);
  EXPECT_EQ(rsp_exact(g, 0, 2, 4)->cost, 2u);
  const auto same = rsp_exact(g, 1, 1, 0);
  ASSERT_TRUE(same);
  EXPECT_TRUE(same->empty());
  EXPECT_FALSE(rsp_exact(g, 0, 2, 0));
  EXPECT_FALSE(rsp_exact(g, 2, 0, 100));
}

TEST(RspExact, ZeroBoundUsesZeroLengthEdgesOnly) {
  const Digraph g(3, {{0, 1, 4, 0}, {1, 2, 4, 0}, {0, 2, 1, 1}});
  EXPECT_EQ(rsp_exact(g, 0, 2, 0)->cost, 8u);
  EXPECT_EQ(rsp_exact(g, 0, 2, 1)->cost, 1u);
}

TEST(RspExact, TableCapIsEnforced) {
  const Digraph g(2, {{0, 1, 1, 2'000'000}});
  EXPECT_THROW(rsp_exact(g, 0, 1, 1'999'999), BudgetTooLarge);
  EXPECT_EQ(rsp_exact(g, 0, 1, 2'000'000, 10'000'000)->cost, 1u);
}

TEST(RspExact, PrefersFewerEdgesOnCostTies) {
  const Digraph g(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 2, 2}});
  EXPECT_EQ(rsp_exact(g, 0, 2, 5)->edges, (std::vector<EdgeId>{2}));
}

TEST(RspRelaxed, WorkedExamples) {
  const Digraph g = g1();
  const auto p = min_cost_path_relaxed(g, 0, 2, 2, 0.5);
  ASSERT_TRUE(p);
  EXPECT_LE(p->cost, 5u);
  EXPECT_LE(p->length, 3u);
  EXPECT_TRUE(min_cost_path_relaxed(g, 1, 1, 0, 0.5)->empty());
  EXPECT_FALSE(min_cost_path_relaxed(g, 0, 2, 0, 0.5));
}

TEST(RspRelaxed, InactiveBoundGivesUnconstrainedCheapestPath) {
  Rng rng(3);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 2 + rng.uniform(0, 9);
    const Digraph g = testing::random_digraph(rng, n, rng.uniform(1, 3 * n), 50, 10);
    const auto u = static_cast<NodeId>(rng.uniform(0, n - 1));
    const auto v = static_cast<NodeId>(rng.uniform(0, n - 1));
    const auto unconstrained = testing::brute_force_rsp(g, u, v, 1e18);
    const auto p = min_cost_path_relaxed(g, u, v, g.total_length(), 0.3);
    ASSERT_EQ(p.has_value(), unconstrained.has_value());
    if (p) EXPECT_EQ(p->cost, *unconstrained);
  }
}

TEST(RspHassin, WorkedExamples) {
  const Digraph g = g1();
  const auto w = costs_as_weights(g);
  const auto p = min_weight_path_hassin(g, w, 0, 2, 2, 0.1);
  ASSERT_TRUE(p);
  EXPECT_LE(p->weight, 5.5);
  EXPECT_LE(p->path.length, 2u);

  const std::vector<double> zero(3, 0.0);
  const auto z = min_weight_path_hassin(g, zero, 0, 2, 4, 0.1);
  ASSERT_TRUE(z);
  EXPECT_EQ(z->weight, 0.0);
  EXPECT_LE(z->path.length, 4u);

  EXPECT_FALSE(min_weight_path_hassin(g, w, 0, 2, 0, 0.1));
}

TEST(RspHassin, RejectsBadWeights) {
  const Digraph g = g1();
  const std::vector<double> w = {1, -1, 2};
  EXPECT_THROW(min_weight_path_hassin(g, w, 0, 2, 4, 0.1), Error);
}

class RspRandom : public ::testing::TestWithParam<int> {};

TEST_P(RspRandom, AgreesWithPathEnumeration) {
  Rng rng(1000 + GetParam());
  const std::size_t n = 2 + rng.uniform(0, 8);
  const Digraph g = testing::random_digraph(rng, n, rng.uniform(1, 3 * n), 50, 10);
  std::vector<double> w(g.edge_count());
  for (double& x : w) x = static_cast<double>(rng.uniform(0, 1000)) / 37.0;
  for (int q = 0; q < 8; ++q) {
    const auto u = static_cast<NodeId>(rng.uniform(0, n - 1));
    const auto v = static_cast<NodeId>(rng.uniform(0, n - 1));
    const Length bound = rng.uniform(0, 40);
    const double eps = 0.05 + static_cast<double>(rng.uniform(0, 100)) / 100.0;

    const auto opt = testing::brute_force_rsp(g, u, v, static_cast<double>(bound));
    const auto exact = rsp_exact(g, u, v, bound);
    ASSERT_EQ(exact.has_value(), opt.has_value());
    if (exact) {
      EXPECT_EQ(exact->cost, *opt);
      EXPECT_LE(exact->length, bound);
      EXPECT_TRUE(is_valid_path(g, *exact, u, v));
    }

    // May also answer when only a (1+eps)-stretched path exists.
    const auto relaxed = min_cost_path_relaxed(g, u, v, bound, eps);
    if (opt) ASSERT_TRUE(relaxed);
    if (relaxed) {
      if (opt) EXPECT_LE(relaxed->cost, *opt);
      EXPECT_LE(static_cast<double>(relaxed->length), (1 + eps) * static_cast<double>(bound));
      EXPECT_TRUE(is_valid_path(g, *relaxed, u, v));
    }

    const auto wopt = testing::brute_force_min_weight(g, w, u, v, bound);
    const auto hassin = min_weight_path_hassin(g, w, u, v, bound, eps);
    ASSERT_EQ(hassin.has_value(), wopt.has_value());
    if (hassin) {
      EXPECT_LE(hassin->path.length, bound);
      EXPECT_LE(hassin->weight, (1 + eps) * *wopt + 1e-9);
      EXPECT_TRUE(is_valid_path(g, hassin->path, u, v));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RspRandom, ::testing::Range(0, 60));

TEST(RspExact, MonotoneInBound) {
  Rng rng(17);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 2 + rng.uniform(0, 10);
    const Digraph g = testing::random_digraph(rng, n, rng.uniform(1, 3 * n), 50, 10);
    const auto u = static_cast<NodeId>(rng.uniform(0, n - 1));
    const auto v = static_cast<NodeId>(rng.uniform(0, n - 1));
    std::optional<Cost> last;
    for (Length d = 0; d <= 60; ++d) {
      const auto p = rsp_exact(g, u, v, d);
      if (last) {
        ASSERT_TRUE(p);
        EXPECT_LE(p->cost, *last);
      }
      if (p) last = p->cost;
    }
  }
}

TEST(RelaxedPathOracle, MatchesFreeFunction) {
  Rng rng(23);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = 2 + rng.uniform(0, 10);
    const Digraph g = testing::random_digraph(rng, n, rng.uniform(1, 3 * n), 50, 100);
    RelaxedPathOracle oracle(g, 0.5);
    for (int q = 0; q < 20; ++q) {
      const auto u = static_cast<NodeId>(rng.uniform(0, n - 1));
      const auto v = static_cast<NodeId>(rng.uniform(0, n - 1));
      const Length bound = rng.uniform(0, 400);
      const auto a = oracle.path(u, v, bound);
      const auto b = min_cost_path_relaxed(g, u, v, bound, 0.5);
      EXPECT_EQ(a, b);
      EXPECT_EQ(oracle.cost(u, v, bound), a ? std::optional<Cost>(a->cost) : std::nullopt);
    }
  }
}

}  // namespace
}  // namespace slnet
