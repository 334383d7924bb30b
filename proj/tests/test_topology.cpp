#include <gtest/gtest.h>

#include <sstream>

#include "aig/enumerate.hpp"
#include "aig/topology.hpp"
#include "aig/topology_io.hpp"
#include "oracles.hpp"

using namespace aig;

namespace {

Topology two_blocks() {
  // {∅, {0,1}, {2,3}, X}
  return Topology::from_opens(4, {PointSet{}, PointSet{0, 1}, PointSet{2, 3}, PointSet::full(4)});
}

}  // namespace

TEST(Topology, RejectsNonTopologies) {
  EXPECT_THROW(Topology::from_opens(2, {PointSet{0}, PointSet{0, 1}}), std::invalid_argument);
  EXPECT_THROW(Topology::from_opens(2, {PointSet{}, PointSet{0}}), std::invalid_argument);
  // {0} and {1} open but their union {0,1,...} missing on 3 points.
  EXPECT_THROW(Topology::from_opens(3, {PointSet{}, PointSet{0}, PointSet{1}, PointSet::full(3)}),
               std::invalid_argument);
  // {0,1} and {1,2} open, intersection {1} missing.
  EXPECT_THROW(Topology::from_opens(3, {PointSet{}, PointSet{0, 1}, PointSet{1, 2}, PointSet::full(3)}),
               std::invalid_argument);
  EXPECT_THROW(Topology::from_opens(2, {PointSet{}, PointSet{0}, PointSet{0}, PointSet{0, 1}}),
               std::invalid_argument);
  EXPECT_THROW(Topology::from_opens(2, {PointSet{}, PointSet{2}, PointSet{0, 1}}), std::invalid_argument);
  EXPECT_THROW(Topology::discrete(0), std::invalid_argument);
  EXPECT_THROW(Topology::discrete(17), std::invalid_argument);
}

TEST(Topology, Interior) {
  EXPECT_EQ(Topology::discrete(3).interior(PointSet{0, 1}), (PointSet{0, 1}));
  EXPECT_EQ(Topology::sierpinski().interior(PointSet{1}), PointSet{});
  EXPECT_EQ(oracle::interior_by_scan(Topology::sierpinski(), PointSet{1}), PointSet{});
  auto t = two_blocks();
  EXPECT_EQ(t.interior(t.ground()), t.ground());
  EXPECT_THROW(t.interior(PointSet{5}), std::invalid_argument);
}

TEST(Topology, ClosureAndDensity) {
  auto s = Topology::sierpinski();
  EXPECT_EQ(s.closure(PointSet{}), PointSet{});
  EXPECT_EQ(s.closure(PointSet{0}), (PointSet{0, 1}));
  EXPECT_TRUE(s.is_dense(PointSet{0}));
  auto d = Topology::discrete(3);
  EXPECT_EQ(d.closure(PointSet{0, 2}), (PointSet{0, 2}));
  EXPECT_FALSE(d.is_dense(PointSet{0, 1}));
  EXPECT_TRUE(d.is_dense(d.ground()));
}

TEST(Topology, IsolatedPointsAndMinimalNeighborhoods) {
  EXPECT_EQ(Topology::discrete(4).isolated_points(), PointSet::full(4));
  EXPECT_EQ(Topology::sierpinski().isolated_points(), PointSet{0});
  EXPECT_EQ(Topology::indiscrete(3).isolated_points(), PointSet{});

  EXPECT_EQ(Topology::discrete(3).minimal_neighborhood(1), PointSet{1});
  EXPECT_EQ(Topology::sierpinski().minimal_neighborhood(1), (PointSet{0, 1}));
  EXPECT_EQ(Topology::indiscrete(3).minimal_neighborhood(2), PointSet::full(3));
  EXPECT_THROW(Topology::discrete(3).minimal_neighborhood(3), std::out_of_range);
}

TEST(Topology, WeightAndCellularity) {
  EXPECT_EQ(weight(Topology::discrete(4)), 4u);
  EXPECT_EQ(weight(Topology::indiscrete(3)), 1u);
  EXPECT_EQ(weight(Topology::sierpinski()), 2u);
  EXPECT_EQ(cellularity(Topology::discrete(5)), 5u);
  EXPECT_EQ(cellularity(Topology::indiscrete(4)), 1u);
  EXPECT_EQ(cellularity(two_blocks()), 2u);
  EXPECT_EQ(oracle::cellularity_by_families(two_blocks()), 2u);
}

TEST(Topology, Classify) {
  auto d = classify(Topology::discrete(3));
  EXPECT_TRUE(d.is_discrete && d.is_T1 && d.is_T0);
  EXPECT_EQ(d.component_count, 3);

  auto s = classify(Topology::sierpinski());
  EXPECT_EQ(s.component_count, 1);
  EXPECT_FALSE(s.is_T1);
  EXPECT_TRUE(s.is_T0);

  auto b = classify(two_blocks());
  EXPECT_EQ(b.component_count, 2);
  EXPECT_FALSE(b.has_isolated_point);
  EXPECT_FALSE(b.is_T0);
}

TEST(Topology, TychonoffReflection) {
  auto r = tychonoff_reflection(Topology::discrete(3));
  EXPECT_EQ(r.space, Topology::discrete(3));
  EXPECT_EQ(r.quotient, (std::vector<int>{0, 1, 2}));

  auto s = tychonoff_reflection(Topology::sierpinski());
  EXPECT_EQ(s.space.size(), 1);
  EXPECT_EQ(oracle::continuous_binary_by_preimages(Topology::sierpinski()), 2u);
  EXPECT_EQ(count_continuous_binary_functions(Topology::sierpinski()), 2u);

  auto b = tychonoff_reflection(two_blocks());
  EXPECT_EQ(b.space, Topology::discrete(2));
  EXPECT_EQ(b.quotient, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(b.lift(PointSet{1}), (PointSet{2, 3}));
  EXPECT_EQ(oracle::continuous_binary_by_preimages(two_blocks()), 4u);
}

// Properties over every labeled topology with n <= 4.
TEST(TopologyProperties, OperatorLaws) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      for_each_subset(n, [&](PointSet a) {
        auto in = t.interior(a), cl = t.closure(a);
        ASSERT_EQ(in, oracle::interior_by_scan(t, a));
        ASSERT_TRUE(t.is_open(in));
        ASSERT_EQ(t.interior(in), in);
        ASSERT_EQ(t.closure(cl), cl);
        ASSERT_EQ(cl, t.interior(a.complement(n)).complement(n));
        for_each_subset(n, [&](PointSet b) {
          if (!a.subset_of(b)) return;
          ASSERT_TRUE(t.interior(a).subset_of(t.interior(b)));
          ASSERT_TRUE(t.closure(a).subset_of(t.closure(b)));
        });
      });
      for (int x = 0; x < n; ++x) ASSERT_TRUE(t.is_open(t.minimal_neighborhood(x)));
    }
}

TEST(TopologyProperties, CellularityMatchesExhaustiveSearch) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n))
      ASSERT_EQ(cellularity(t), oracle::cellularity_by_families(t)) << to_text(t);
}

TEST(TopologyProperties, WeightMatchesBaseSearch) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_topologies(n))
      ASSERT_EQ(weight(t), oracle::weight_by_base_search(t)) << to_text(t);
}

TEST(TopologyProperties, ComponentCountGivesContinuousFunctionCount) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      auto expected = std::size_t{1} << classify(t).component_count;
      ASSERT_EQ(oracle::continuous_binary_by_preimages(t), expected) << to_text(t);
      ASSERT_EQ(count_continuous_binary_functions(t), expected) << to_text(t);
    }
}

TEST(TopologyProperties, ClassFlagsChain) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      auto c = classify(t);
      if (c.is_discrete) ASSERT_TRUE(c.is_T1);
      if (c.is_T1) ASSERT_TRUE(c.is_T0);
      // Finite T1 spaces are discrete.
      if (c.is_T1) ASSERT_TRUE(c.is_discrete);
    }
}

TEST(TopologyIo, TextFormat) {
  EXPECT_EQ(to_text(Topology::sierpinski()), "n=2; opens=0,1,3");
  EXPECT_EQ(to_text(Topology::discrete(4)).substr(0, 22), "n=4; opens=0,1,2,3,4,5");
  auto t = parse_topology_text(" n=4 ;opens= 0x0, 3,C ,F ");
  EXPECT_EQ(t, two_blocks());
  EXPECT_THROW(parse_topology_text("n=2 opens=0,3"), ParseError);
  EXPECT_THROW(parse_topology_text("n=2; opens=0,zz,3"), ParseError);
  EXPECT_THROW(parse_topology_text("n=2; opens=0,1"), ParseError);
}

TEST(TopologyIo, JsonAndMixedStreams) {
  auto j = to_json(two_blocks());
  EXPECT_EQ(j.dump(), R"({"n":4,"opens":["0","3","c","f"]})");
  EXPECT_EQ(topology_from_json(j), two_blocks());

  std::istringstream text("# comment\n\nn=2; opens=0,1,3\n{\"n\":2,\"opens\":[\"0\",\"3\"]}\n");
  auto ts = read_topologies(text);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0], Topology::sierpinski());
  EXPECT_EQ(ts[1], Topology::indiscrete(2));

  std::istringstream arr(R"([{"n":2,"opens":[0,1,3]}])");
  EXPECT_EQ(read_topologies(arr).at(0), Topology::sierpinski());
  std::istringstream pretty("{\n  \"n\": 2,\n  \"opens\": [\"0\", \"3\"]\n}\n");
  EXPECT_EQ(read_topologies(pretty).at(0), Topology::indiscrete(2));
}

TEST(TopologyIo, RoundTripOverEnumeration) {
  for (const auto& t : enumerate_topologies(4)) {
    ASSERT_EQ(parse_topology_text(to_text(t)), t);
    ASSERT_EQ(topology_from_json(to_json(t)), t);
  }
}
