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

#include "spinsync/errors.hpp"
#include "spinsync/multigraph.hpp"
#include "spinsync/random_models.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync {
namespace {

MultiGraph triangle() {
  return MultiGraph({"u", "v", "w"}, {{"e1", "u", "w"}, {"e2", "w", "v"}, {"e3", "u", "v"}},
                    std::make_pair(std::string("u"), std::string("v")));
}

TEST(MultiGraph, ConstructionAndLookup) {
  const MultiGraph g = triangle();
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge_index("e2"), 1u);
  EXPECT_EQ(g.vertex("w"), 2u);
  EXPECT_FALSE(g.find_vertex("x").has_value());
  EXPECT_THROW(g.vertex("x"), InvalidInput);
  EXPECT_EQ(g.incident(g.vertex("u")), (std::vector<std::size_t>{0, 2}));
  ASSERT_TRUE(g.terminals().has_value());
  EXPECT_EQ(g.terminals()->first, 0u);
  EXPECT_TRUE(g.is_connected());
  EXPECT_FALSE(g.is_tree());
}

TEST(MultiGraph, ParallelEdgesAllowedSelfLoopsForbidden) {
  EXPECT_NO_THROW(MultiGraph({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}}));
  EXPECT_THROW(MultiGraph({"u", "v"}, {{"a", "u", "u"}}), InvalidInput);
  EXPECT_THROW(MultiGraph({"u", "v"}, {{"a", "u", "v"}, {"a", "v", "u"}}), InvalidInput);
  EXPECT_THROW(MultiGraph({"u", "u"}, {}), InvalidInput);
  EXPECT_THROW(MultiGraph({"u", "v"}, {{"a", "u", "x"}}), InvalidInput);
  EXPECT_THROW(MultiGraph({"u", "v"}, {}, std::make_pair(std::string("u"), std::string("u"))), InvalidInput);
}

TEST(MultiGraph, TreesAndConnectivity) {
  EXPECT_TRUE(regular_tree(2, 3).is_tree());
  EXPECT_EQ(regular_tree(3, 2).vertex_count(), 13u);
  EXPECT_FALSE(MultiGraph({"a", "b", "c"}, {{"e", "a", "b"}}).is_connected());
  CounterRng rng(3, 0);
  for (int i = 0; i < 20; ++i) {
    EXPECT_TRUE(gen::random_tree(rng, 6).is_tree());
    EXPECT_TRUE(gen::random_connected_graph(rng, 5, 7).is_connected());
    const MultiGraph sp = gen::random_sp_graph(rng, 7);
    EXPECT_EQ(sp.edge_count(), 7u);
    EXPECT_TRUE(sp.is_connected());
  }
}

TEST(SyncModel, ValidatesChannelsAndPrior) {
  const MultiGraph g = triangle();
  EXPECT_THROW(SyncModel(g, {make_bsc(Rational(1, 4))}), InvalidInput);
  EXPECT_THROW(SyncModel(g, std::vector<Channel>(3, make_noiseless(GroupSpec(4)))), InvalidInput);
  const SyncModel z4(g, std::vector<Channel>(3, make_noiseless(GroupSpec(4))), GroupSpec(4));
  EXPECT_FALSE(z4.is_uniform_binary());
  EXPECT_THROW(z4.require_uniform_binary("test"), NotApplicable);

  const SyncModel biased(g, std::vector<Channel>(3, make_bsc(Rational(1, 4))), GroupSpec::binary(),
                         std::vector<Rational>{Rational(1, 5), Rational(1, 2), Rational(1, 2)});
  EXPECT_FALSE(biased.has_uniform_prior());
  EXPECT_EQ(biased.prior_plus(0), Rational(1, 5));
  const SyncModel halves(g, std::vector<Channel>(3, make_bsc(Rational(1, 4))), GroupSpec::binary(),
                         std::vector<Rational>(3, Rational(1, 2)));
  EXPECT_TRUE(halves.has_uniform_prior());
  EXPECT_THROW(SyncModel(g, std::vector<Channel>(3, make_bsc(Rational(1, 4))), GroupSpec::binary(),
                         std::vector<Rational>(3, Rational(3, 2))),
               InvalidInput);
}

TEST(SyncModel, TieVertexSet) {
  const SyncModel m = bsc_model(regular_tree(2, 1), Rational(1, 10));
  const std::size_t leaves[] = {1, 2};
  const TiedModel tied = tie_vertex_set(m, leaves);
  EXPECT_EQ(tied.model.graph().vertex_count(), 4u);
  EXPECT_EQ(tied.model.graph().edge_count(), 4u);
  EXPECT_EQ(tied.target, 3u);
  EXPECT_EQ(tied.model.channel(3), make_noiseless());
  const std::size_t one[] = {2};
  EXPECT_EQ(tie_vertex_set(m, one).model, m);
  EXPECT_EQ(tie_vertex_set(m, one).target, 2u);
}

}  // namespace
}  // namespace spinsync
