#include <gtest/gtest.h>

#include <random>

#include "aig/invariants.hpp"
#include "oracles.hpp"

using namespace aig;

namespace {

DistanceValue from_oracle(std::size_t len) {
  return len == 0 ? DistanceValue::inf() : DistanceValue::of(len);
}

}  // namespace

// Bounded search, disjoint-path flow and full path enumeration must agree.
// The cap is raised to |V| so the bounded route never falls back.
TEST(GiProperty, ThreeMethodsAgreeOnRandomGraphs) {
  std::mt19937_64 rng(1234567);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto g = oracle::random_graph(size(rng), density(rng), rng);
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = u; v < g.size(); ++v) {
        auto bounded = gi_bounded(g, u, v, std::max<std::size_t>(g.size(), 3));
        auto flow = gi_disjoint_paths(g, u, v);
        ASSERT_EQ(bounded, flow) << "trial " << trial << " pair " << u << "," << v;
        ASSERT_EQ(bounded, gi(g, u, v));
        if (g.size() <= 9) ASSERT_EQ(bounded, from_oracle(oracle::gi_by_enumeration(g, u, v)));
        ++pairs;
      }
  }
  EXPECT_GT(pairs, 1000u);
}

TEST(GiProperty, GirthIsMinimumOverVertices) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(2 + trial % 11, 0.3, rng);
    auto best = DistanceValue::inf();
    for (std::size_t u = 0; u < g.size(); ++u) best = std::min(best, gi_disjoint_paths(g, u, u));
    ASSERT_EQ(girth(g), best) << "trial " << trial;
  }
}

TEST(GiProperty, DefaultCapEitherAgreesOrSignalsBreach) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_graph(12, 0.18, rng);
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        auto exact = gi_disjoint_paths(g, u, v);
        try {
          ASSERT_EQ(gi_bounded(g, u, v, 4), exact);
        } catch (const CycleCapExceeded&) {
          ASSERT_TRUE(exact.is_finite());
          ASSERT_GT(exact.value(), 4u);
        }
      }
  }
}
