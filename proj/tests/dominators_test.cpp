#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace sbgraph {
namespace {

using testing::vid;

Digraph chain() { return Digraph(3, {{0, 1}, {1, 2}}); }
Digraph diamond() { return Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

TEST(DominatorTree, Chain) {
  auto t = dominator_tree(chain(), 0);
  EXPECT_FALSE(t.idom(0));
  EXPECT_EQ(t.idom(1), 0u);
  EXPECT_EQ(t.idom(2), 1u);
}

TEST(DominatorTree, Diamond) {
  auto t = dominator_tree(diamond(), 0);
  EXPECT_EQ(t.idom(3), 0u);
  EXPECT_EQ(t.idom(1), 0u);
  EXPECT_EQ(t.idom(2), 0u);
}

TEST(DominatorTree, Figure3VertexSevenDominatedByTwo) {
  auto g = testing::fig3();
  auto t = dominator_tree(g, vid(g, 5));
  EXPECT_EQ(t.idom(vid(g, 7)), vid(g, 2));
}

TEST(DominatorTree, UnreachableVerticesHaveNoIdom) {
  Digraph g(3, {{0, 1}, {2, 1}});
  auto t = dominator_tree(g, 0);
  EXPECT_FALSE(t.is_reachable(2));
  EXPECT_FALSE(t.idom(2));
  EXPECT_THROW(t.dominates(2, 1), PreconditionError);
}

TEST(DominatorTree, MatchesFixedPointOracle) {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    std::size_t n = 1 + seed % 9;
    Digraph g = seed % 3 == 0   ? reference::random_digraph(n, 2 * n, seed)
                : seed % 3 == 1 ? reference::random_rooted(n, seed % 9, seed)
                                : reference::random_strongly_connected(n, seed % 6, seed);
    VertexId root = static_cast<VertexId>(seed % n);
    auto tree = dominator_tree(g, root);
    auto expected = reference::fixed_point_idoms(g, root);
    for (VertexId v = 0; v < n; ++v) {
      auto got = tree.idom(v);
      ASSERT_EQ(got.has_value(), expected[v].has_value()) << "seed " << seed << " v " << v;
      if (got) {
        EXPECT_EQ(*got, *expected[v]) << "seed " << seed << " v " << v;
      }
    }
  }
}

TEST(Dominates, AncestorQueries) {
  auto t = dominator_tree(chain(), 0);
  for (VertexId v = 0; v < 3; ++v) EXPECT_TRUE(t.dominates(0, v));
  EXPECT_TRUE(t.dominates(1, 2));
  EXPECT_FALSE(t.dominates(2, 1));
  EXPECT_TRUE(t.dominates(2, 2));
  auto d = dominator_tree(diamond(), 0);
  EXPECT_FALSE(d.dominates(1, 3));
}

TEST(Dominates, AgreesWithIdomChains) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = reference::random_rooted(2 + seed % 10, seed % 12, seed);
    auto t = dominator_tree(g, 0);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool walk = false;
        for (std::optional<VertexId> x = v; x; x = t.idom(*x))
          if (*x == u) walk = true;
        EXPECT_EQ(t.dominates(u, v), walk);
      }
  }
}

TEST(FlowgraphBridges, Chain) {
  EXPECT_EQ(flowgraph_bridges(chain(), 0), (std::vector<ArcId>{0, 1}));
}

TEST(FlowgraphBridges, DiamondHasOnlyUniqueInArcs) {
  auto g = diamond();
  EXPECT_EQ(arcs_of(g, flowgraph_bridges(g, 0)), (std::vector<Arc>{{0, 1}, {0, 2}}));
}

TEST(FlowgraphBridges, Figure3ContainsTwoSeven) {
  auto g = testing::fig3();
  auto bridges = flowgraph_bridges(g, vid(g, 5));
  EXPECT_NE(std::find(bridges.begin(), bridges.end(), testing::aid(g, 2, 7)), bridges.end());
}

TEST(FlowgraphBridges, RequiresEveryVertexReachable) {
  EXPECT_THROW(flowgraph_bridges(Digraph(3, {{0, 1}}), 0), PreconditionError);
}

TEST(FlowgraphBridges, MatchesDeletionOracle) {
  for (std::uint64_t seed = 0; seed < 800; ++seed) {
    std::size_t n = 1 + seed % 9;
    Digraph g = seed % 2 ? reference::random_rooted(n, seed % 10, seed)
                         : reference::random_strongly_connected(n, seed % 6, seed);
    EXPECT_EQ(flowgraph_bridges(g, 0), reference::deletion_flowgraph_bridges(g, 0))
        << "seed " << seed;
  }
}

TEST(FlowgraphBridges, NonBridgeDeletionKeepsEverythingReachable) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = reference::random_rooted(3 + seed % 12, seed % 15, seed);
    auto bridges = flowgraph_bridges(g, 0);
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      if (std::binary_search(bridges.begin(), bridges.end(), a)) continue;
      auto reach = reachable(WithoutArc(g, a), 0);
      EXPECT_EQ(std::count(reach.begin(), reach.end(), 1),
                static_cast<long>(g.vertex_count()));
    }
  }
}

}  // namespace
}  // namespace sbgraph
