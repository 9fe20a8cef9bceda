// Copyright 2026 The spinsync Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "spinsync/errors.hpp"
#include "spinsync/paths.hpp"
#include "spinsync/random_models.hpp"
#include "spinsync/sp_tree.hpp"
#include "spinsync/sync_model.hpp"
#include "spinsync/tied_tree.hpp"

namespace spinsync::sp {
namespace {

MultiGraph triangle() {
  return MultiGraph({"u", "v", "w"}, {{"e1", "u", "w"}, {"e2", "w", "v"}, {"e3", "u", "v"}},
                    std::make_pair(std::string("u"), std::string("v")));
}

std::multiset<std::tuple<std::string, std::string, std::string>> edge_multiset(const MultiGraph& g) {
  std::multiset<std::tuple<std::string, std::string, std::string>> out;
  for (const Edge& e : g.edges()) {
    const auto& a = g.vertex_name(e.u);
    const auto& b = g.vertex_name(e.v);
    out.insert({e.id, std::min(a, b), std::max(a, b)});
  }
  return out;
}

TEST(SpRecognize, SingleEdgeIsALeaf) {
  const MultiGraph g({"u", "v"}, {{"e", "u", "v"}});
  const auto tree = sp_recognize(g, 0, 1);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->nodes().size(), 1u);
  EXPECT_EQ(tree->node(tree->root()).kind, NodeKind::Leaf);
  EXPECT_EQ(tree->text(), "e");
}

TEST(SpRecognize, TriangleDecomposes) {
  const auto tree = sp_recognize(triangle());
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->text(), "P(e3,S(e1,e2@w))");
  const SPNode& root = tree->node(tree->root());
  EXPECT_EQ(root.kind, NodeKind::Parallel);
  EXPECT_EQ(tree->node(root.right).kind, NodeKind::Series);
  EXPECT_TRUE(validate(*tree, triangle()));
}

TEST(SpRecognize, OrientationFollowsTerminals) {
  const auto tree = sp_recognize(triangle(), 1, 0);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->text(), "P(e3,S(e2,e1@w))");
  EXPECT_EQ(tree->source(), 1u);
  EXPECT_TRUE(validate(*tree, triangle()));
}

TEST(SpRecognize, CompleteGraphOnFourVerticesIsRejected) {
  const MultiGraph k4 = gen::complete_graph_k4();
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      if (a != b) EXPECT_FALSE(sp_recognize(k4, a, b).has_value());
    }
  }
}

TEST(SpRecognize, DanglingVertexIsNotTwoTerminal) {
  const MultiGraph g({"u", "v", "x"}, {{"e1", "u", "v"}, {"e2", "v", "x"}});
  EXPECT_FALSE(sp_recognize(g, 0, 1).has_value());
  EXPECT_TRUE(sp_recognize(g, 0, 2).has_value());
}

TEST(SpRecognize, InputErrors) {
  EXPECT_THROW(sp_recognize(MultiGraph({"u", "v", "x"}, {{"e", "u", "v"}}), 0, 1), InvalidInput);
  EXPECT_THROW(sp_recognize(triangle(), 0, 0), InvalidInput);
  EXPECT_THROW(sp_recognize(MultiGraph({"u", "v"}, {{"e", "u", "v"}})), InvalidInput);
}

TEST(SpRecognize, RandomConstructionsRoundTrip) {
  CounterRng rng(61, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = gen::random_sp_graph(rng, 1 + rng.below(12));
    const auto tree = sp_recognize(g);
    ASSERT_TRUE(tree.has_value());
    EXPECT_TRUE(validate(*tree, g));
    EXPECT_EQ(edge_multiset(recompose(*tree)), edge_multiset(g));
    const SPTree reparsed = parse_sp_text(tree->text(), g, 0, 1);
    EXPECT_EQ(reparsed.text(), tree->text());
  }
}

TEST(SpRecognize, SubdividedCompleteGraphsAreRejected) {
  CounterRng rng(62, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = gen::random_k4_subdivision(rng, 6);
    EXPECT_FALSE(sp_recognize(g).has_value());
  }
}

TEST(SpText, RejectsMismatchedTrees) {
  const MultiGraph g = triangle();
  EXPECT_THROW(parse_sp_text("P(e3,S(e1,e2@v))", g, 0, 1), InvalidInput);
  EXPECT_THROW(parse_sp_text("P(e3,e1)", g, 0, 1), InvalidInput);
  EXPECT_THROW(parse_sp_text("S(e1,e2@w)", g, 0, 1), InvalidInput);
  EXPECT_THROW(parse_sp_text("P(e3,S(e1,e2@w)", g, 0, 1), InvalidInput);
  EXPECT_THROW(parse_sp_text("P(e3,S(e1,e9@w))", g, 0, 1), InvalidInput);
  EXPECT_EQ(parse_sp_text("P(S(e1,e2@w),e3)", g, 0, 1).text(), "P(S(e1,e2@w),e3)");
}

TEST(Paths, SmallCases) {
  EXPECT_EQ(enumerate_paths(triangle(), 0, 1), (std::vector<Path>{{0, 1}, {2}}));
  const MultiGraph pair({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}});
  EXPECT_EQ(enumerate_paths(pair, 0, 1), (std::vector<Path>{{0}, {1}}));
  EXPECT_EQ(count_paths(gen::complete_graph_k4(), 0, 1), 5u);
  EXPECT_THROW(count_paths(gen::complete_graph_k4(), 0, 1, 4), BudgetExceeded);
}

TEST(Paths, CountsComposeOverTheDecomposition) {
  CounterRng rng(63, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = gen::random_sp_graph(rng, 1 + rng.below(12));
    const auto tree = sp_recognize(g);
    ASSERT_TRUE(tree.has_value());
    const auto expected = tree->fold<std::uint64_t>([](std::size_t, std::size_t, std::size_t) { return 1ULL; },
                                                    [](auto a, auto b) { return a * b; },
                                                    [](auto a, auto b) { return a + b; });
    const auto paths = enumerate_paths(g, 0, 1);
    EXPECT_EQ(paths.size(), expected);
    for (const Path& p : paths) {
      std::set<std::size_t> visited{0};
      std::size_t at = 0;
      for (const std::size_t e : p) {
        at = g.edge(e).other(at);
        EXPECT_TRUE(visited.insert(at).second);
      }
      EXPECT_EQ(at, 1u);
    }
  }
}

TEST(TiedTree, StarAndPathShapes) {
  const SyncModel star = bsc_model(regular_tree(2, 1), Rational(1, 10));
  const SyncModel tied = tied_tree_build(star, 0);
  const auto tree = sp_recognize(tied.graph());
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->text(), "P(S(e:r.0,tie:r.0@r.0),S(e:r.1,tie:r.1@r.1))");

  const SyncModel path = bsc_model(regular_tree(1, 3), Rational(1, 10));
  const auto chain = sp_recognize(tied_tree_build(path, 0).graph());
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->node(chain->root()).kind, NodeKind::Series);
  for (const SPNode& n : chain->nodes()) EXPECT_NE(n.kind, NodeKind::Parallel);

  EXPECT_THROW(tied_tree_build(bsc_model(gen::complete_graph_k4(), Rational(1, 4)), 0), InvalidInput);
}

TEST(TiedTree, RegularTreesAreSeriesParallelWithOnePathPerLeaf) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      const SyncModel tied = tied_tree_build(bsc_model(regular_tree(d, depth), Rational(1, 10)), 0);
      EXPECT_TRUE(sp_recognize(tied.graph()).has_value());
      std::uint64_t leaves = 1;
      for (std::size_t i = 0; i < depth; ++i) leaves *= d;
      EXPECT_EQ(count_paths(tied.graph(), 0, tied.graph().vertex_count() - 1), leaves);
    }
  }
  CounterRng rng(64, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const SyncModel tree = bsc_model(gen::random_tree(rng, 2 + rng.below(8)), Rational(1, 5));
    EXPECT_TRUE(sp_recognize(tied_tree_build(tree, 0).graph()).has_value());
  }
}

TEST(TiedTree, PruningKeepsOnlyRootToTargetPaths) {
  const SyncModel tree = bsc_model(regular_tree(2, 2), Rational(1, 10));
  const std::size_t targets[] = {tree.graph().vertex("r.0.1")};
  const PrunedTree pruned = prune_to_paths(tree, 0, targets);
  EXPECT_EQ(pruned.model.graph().vertex_count(), 3u);
  EXPECT_EQ(pruned.model.graph().edge_count(), 2u);
  EXPECT_NE(pruned.vertex_map[targets[0]], SIZE_MAX);
  EXPECT_EQ(pruned.vertex_map[tree.graph().vertex("r.1")], SIZE_MAX);
}

}  // namespace
}  // namespace spinsync::sp
