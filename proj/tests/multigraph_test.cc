#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.h"
#include "twoterm/errors.h"
#include "twoterm/multigraph.h"

namespace twoterm {
namespace {

Network C4(const std::string& t) {
  return FromEdgeList({"a", "b", "c", "d"},
                      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}, "a", t);
}

TEST(Multigraph, RejectsInvalidInput) {
  EXPECT_THROW(FromEdgeList({"a", "a"}, {}, "a", "b"), GraphError);
  EXPECT_THROW(FromEdgeList({"a", "b"}, {{"a", "a"}}, "a", "b"), GraphError);
  EXPECT_THROW(FromEdgeList({"a", "b"}, {{"a", "z"}}, "a", "b"), GraphError);
  EXPECT_THROW(FromEdgeList({"a", "b"}, {{"a", "b"}}, "a", "a"), GraphError);
  EXPECT_THROW(FromEdgeList({"a", "b"}, {{"a", "b"}}, "a", "q"), GraphError);
}

TEST(Multigraph, ParallelEdgesAndDegree) {
  Network n = FromEdgeList({"s", "t"}, {{"s", "t"}, {"t", "s"}, {"s", "t"}},
                           "s", "t");
  EXPECT_EQ(n.graph.Size(), 3u);
  EXPECT_EQ(n.graph.Degree("s"), 3u);
  EXPECT_TRUE(n.graph.HasEdge("e2"));
}

TEST(Multigraph, DeleteAndContract) {
  Network c4 = C4("c");
  Network deleted = DeleteEdge(c4, "e0");
  EXPECT_EQ(deleted.graph.Size(), 3u);
  EXPECT_EQ(c4.graph.Size(), 4u);  // input untouched

  Contraction c = ContractEdge(c4, "e0");
  EXPECT_EQ(c.graph.Order(), 3u);
  EXPECT_EQ(c.graph.Size(), 3u);
  EXPECT_FALSE(c.TerminalsMerged());

  Network st = FromEdgeList({"s", "t", "x"},
                            {{"s", "t"}, {"s", "t"}, {"s", "x"}, {"x", "t"}},
                            "s", "t");
  Contraction merged = ContractEdge(st, "e0");
  EXPECT_TRUE(merged.TerminalsMerged());
  // The parallel s-t edge became a loop and is dropped.
  EXPECT_EQ(merged.graph.Size(), 2u);
}

TEST(Multigraph, Subdivide) {
  Network n = Subdivide(C4("c"), "e1", 3);
  EXPECT_EQ(n.graph.Order(), 6u);
  EXPECT_EQ(n.graph.Size(), 6u);
  EXPECT_TRUE(n.graph.HasVertex("e1:1"));
}

TEST(Multigraph, SubstituteGadgetCounts) {
  Network c4 = C4("c");
  Network result = SubstituteGadget(c4, c4);
  // n_G + m_G (n_H - 2) vertices, m_G m_H edges.
  EXPECT_EQ(result.graph.Order(), 4u + 4u * 2u);
  EXPECT_EQ(result.graph.Size(), 16u);

  Network k2 = FromEdgeList({"u", "v"}, {{"u", "v"}}, "u", "v");
  Network same = SubstituteGadget(c4, k2);
  EXPECT_EQ(same.graph.Order(), 4u);
  EXPECT_EQ(same.graph.Size(), 4u);
  EXPECT_EQ(same.terminals, c4.terminals);

  Network c3 = FromEdgeList({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}},
                            "a", "b");
  Network b2 = FromEdgeList({"u", "v"}, {{"u", "v"}, {"u", "v"}}, "u", "v");
  Network doubled = SubstituteGadget(c3, b2);
  EXPECT_EQ(doubled.graph.Order(), 3u);
  EXPECT_EQ(doubled.graph.Size(), 6u);
}

TEST(Multigraph, SubstituteRejectsDisconnectedGadget) {
  Network gadget = FromEdgeList({"u", "v", "x"}, {{"u", "x"}}, "u", "v");
  EXPECT_THROW(SubstituteGadget(C4("c"), gadget), GraphError);
}

TEST(Multigraph, PruneMatchesSimplePathOracle) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    oracle::Graph g = oracle::RandomGraph(rng, 2, 7, 1, 9);
    std::vector<bool> on_path = oracle::EdgesOnSimplePaths(g);
    Network network = oracle::ToNetwork(g);
    bool connected = false;
    for (bool b : on_path) connected = connected || b;
    if (!connected) {
      EXPECT_THROW(PruneIrrelevant(network), GraphError);
      continue;
    }
    ++checked;
    Network pruned = PruneIrrelevant(network);
    std::set<std::string> kept;
    for (const auto& e : pruned.graph.Edges()) kept.insert(e.id);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      EXPECT_EQ(kept.count("e" + std::to_string(e)) == 1, on_path[e]);
    }
    // Idempotent.
    EXPECT_EQ(PruneIrrelevant(pruned).graph.Size(), pruned.graph.Size());
  }
  EXPECT_GT(checked, 100);
}

TEST(Multigraph, PruneDropsPendantAndDetachedBlocks) {
  // Triangle s-x-t plus a pendant path from x and a cycle hanging off s.
  Network n = FromEdgeList(
      {"s", "t", "x", "y", "c1", "c2"},
      {{"s", "x"}, {"x", "t"}, {"s", "t"}, {"x", "y"}, {"s", "c1"},
       {"c1", "c2"}, {"c2", "s"}},
      "s", "t");
  Network pruned = PruneIrrelevant(n);
  EXPECT_EQ(pruned.graph.Size(), 3u);
  EXPECT_EQ(pruned.graph.Order(), 3u);
}

TEST(Multigraph, NormalKeyIgnoresLabels) {
  Network a = C4("c");
  Network b = FromEdgeList({"w", "x", "y", "z"},
                           {{"y", "z"}, {"w", "x"}, {"x", "y"}, {"z", "w"}},
                           "w", "y");
  EXPECT_EQ(NormalKey(a), NormalKey(b));
  EXPECT_NE(NormalKey(C4("b")), NormalKey(C4("c")));
}

TEST(Multigraph, TerminalPath) {
  Network path = FromEdgeList({"s", "x", "t", "y"},
                              {{"s", "x"}, {"x", "t"}, {"t", "y"}}, "s", "t");
  EXPECT_TRUE(IsTerminalPath(path));
  EXPECT_FALSE(IsTerminalPath(C4("c")));
}

TEST(Families, BuildAndValidate) {
  Network theta = BuildFamily({Family::kTheta, 0, 3, 4, 0});
  EXPECT_EQ(theta.graph.Size(), 12u);
  EXPECT_EQ(theta.graph.Order(), 2u + 3u * 3u);
  Network bundle = BuildFamily({Family::kBundle, 0, 0, 0, 5});
  EXPECT_EQ(bundle.graph.Size(), 5u);
  Network cycle = BuildFamily({Family::kCycle, 7, 3, 0, 0});
  EXPECT_EQ(cycle.graph.Size(), 7u);
  EXPECT_THROW(BuildFamily({Family::kCycle, 7, 4, 0, 0}), DomainError);
  EXPECT_THROW(BuildFamily({Family::kBundle, 0, 0, 0, 0}), DomainError);
  EXPECT_EQ(ParseFamily("theta"), Family::kTheta);
  EXPECT_THROW(ParseFamily("star"), DomainError);
}

}  // namespace
}  // namespace twoterm
