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

#include "spinsync/enumeration.hpp"
#include "spinsync/errors.hpp"
#include "spinsync/mutual_info.hpp"
#include "spinsync/percolation.hpp"
#include "spinsync/random_models.hpp"
#include "spinsync/sp_collapse.hpp"
#include "spinsync/tied_tree.hpp"
#include "support/oracles.hpp"

namespace spinsync::sp {
namespace {

MultiGraph triangle() {
  return MultiGraph({"u", "v", "w"}, {{"e1", "u", "w"}, {"e2", "w", "v"}, {"e3", "u", "v"}},
                    std::make_pair(std::string("u"), std::string("v")));
}

using spinsync::testing::brute_force_conn;

TEST(SpCollapse, SingleEdgeIsItsMergedChannel) {
  const Channel q({"a", "b", "c"}, {{Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                                    {Rational(1, 6), Rational(5, 12), Rational(5, 12)}});
  const SyncModel m(MultiGraph({"u", "v"}, {{"e", "u", "v"}}), {q});
  const auto tree = sp_recognize(m.graph(), 0, 1);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(sp_collapse_to_channel(m, *tree), merge_equivalent_outputs(q));
}

TEST(SpCollapse, SeriesOfBscsIsProductBias) {
  const SyncModel m(MultiGraph({"u", "w", "v"}, {{"e1", "u", "w"}, {"e2", "w", "v"}}),
                    {make_bsc(Rational(1, 10)), make_bsc(Rational(1, 5))});
  const auto tree = sp_recognize(m.graph(), 0, 2);
  ASSERT_TRUE(tree.has_value());
  const Channel collapsed = sp_collapse_to_channel(m, *tree);
  const Rational delta = Rational(4, 5) * Rational(3, 5);
  EXPECT_TRUE(equivalent_channels(collapsed, make_bsc((Rational(1) - delta) / 2)));
  EXPECT_EQ(info::edge_i2(collapsed), info::exact_i2_conditional(m, 0, 2, all_edges(m)));
}

TEST(SpCollapse, BinaryTiedTreeMatchesEnumeration) {
  const SyncModel tied = tied_tree_build(bsc_model(regular_tree(2, 3), Rational(1, 10)), 0);
  const auto tree = sp_recognize(tied.graph());
  ASSERT_TRUE(tree.has_value());
  const std::size_t tie = tied.graph().vertex_count() - 1;
  EXPECT_EQ(info::edge_i2(sp_collapse_to_channel(tied, *tree)),
            info::exact_i2_conditional(tied, 0, tie, all_edges(tied)));
}

TEST(SpCollapse, RandomAsymmetricModelsMatchEnumeration) {
  CounterRng rng(71, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = gen::random_sp_graph(rng, 1 + rng.below(7));
    const SyncModel m = gen::random_model(rng, g, gen::ChannelKind::General, 3);
    const auto tree = sp_recognize(g);
    ASSERT_TRUE(tree.has_value());
    EXPECT_EQ(info::edge_i2(sp_collapse_to_channel(m, *tree)), info::exact_i2_conditional(m, 0, 1, all_edges(m)));
  }
}

TEST(SpCollapse, RejectsGroupModels) {
  const SyncModel z4(MultiGraph({"u", "v"}, {{"e", "u", "v"}}), {make_noiseless(GroupSpec(4))}, GroupSpec(4));
  const auto tree = sp_recognize(z4.graph(), 0, 1);
  EXPECT_THROW(sp_collapse_to_channel(z4, *tree), NotApplicable);
}

TEST(Percolation, ElementaryNetworks) {
  const MultiGraph edge({"u", "v"}, {{"e", "u", "v"}});
  const std::size_t v[] = {1};
  EXPECT_EQ(conn_exact_subsets(edge, std::vector<Rational>{Rational(2, 7)}, 0, v), Rational(2, 7));
  const MultiGraph series({"u", "w", "v"}, {{"a", "u", "w"}, {"b", "w", "v"}});
  const std::size_t v2[] = {2};
  const std::vector<Rational> g2{Rational(1, 3), Rational(3, 4)};
  EXPECT_EQ(conn_exact_subsets(series, g2, 0, v2), Rational(1, 4));
  const MultiGraph parallel({"u", "v"}, {{"a", "u", "v"}, {"b", "u", "v"}});
  EXPECT_EQ(conn_exact_subsets(parallel, g2, 0, v), Rational(1) - Rational(2, 3) * Rational(1, 4));
  EXPECT_THROW(conn_exact_subsets(parallel, std::vector<Rational>{Rational(1, 2)}, 0, v), InvalidInput);
  EXPECT_THROW(conn_exact_subsets(parallel, g2, 0, v, 1), BudgetExceeded);
}

TEST(Percolation, TriangleReliability) {
  const auto tree = sp_recognize(triangle());
  ASSERT_TRUE(tree.has_value());
  const std::vector<Rational> half(3, Rational(1, 2));
  EXPECT_EQ(conn_sp_reliability(*tree, half), Rational(5, 8));
  const std::size_t v[] = {1};
  EXPECT_EQ(conn_exact_subsets(triangle(), half, 0, v), Rational(5, 8));
  EXPECT_EQ(conn_sp_reliability(*tree, std::vector<Rational>(3, Rational(1))), Rational(1));
  EXPECT_EQ(conn_sp_reliability(*tree, std::vector<Rational>{Rational(0), Rational(1, 2), Rational(0)}), Rational(0));
}

TEST(Percolation, SubsetWalkMatchesBruteForceOnSets) {
  CounterRng rng(72, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    const MultiGraph g = gen::random_connected_graph(rng, n, n - 1 + rng.below(5));
    std::vector<Rational> gamma;
    for (std::size_t e = 0; e < g.edge_count(); ++e) gamma.push_back(gen::random_fraction(rng, 0, 8, 8));
    std::vector<std::size_t> targets;
    for (std::size_t w = 1; w < n; ++w) {
      if (rng.coin()) targets.push_back(w);
    }
    if (targets.empty()) targets.push_back(n - 1);
    EXPECT_EQ(conn_exact_subsets(g, gamma, 0, targets), brute_force_conn(g, gamma, 0, targets));
  }
}

TEST(Percolation, SeriesParallelRecursionMatchesSubsets) {
  CounterRng rng(73, 0);
  for (int trial = 0; trial < 150; ++trial) {
    const MultiGraph g = gen::random_sp_graph(rng, 1 + rng.below(14));
    const auto tree = sp_recognize(g);
    ASSERT_TRUE(tree.has_value());
    std::vector<Rational> gamma;
    std::vector<double> approx;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      gamma.push_back(gen::random_fraction(rng, 0, 16, 16));
      approx.push_back(gamma.back().to_double());
    }
    const std::size_t v[] = {1};
    const Rational exact = conn_exact_subsets(g, gamma, 0, v);
    EXPECT_EQ(conn_sp_reliability(*tree, gamma), exact);
    EXPECT_NEAR(conn_sp_reliability(*tree, approx), exact.to_double(), 1e-12);
    EXPECT_NEAR(conn_exact_subsets(g, approx, 0, v), exact.to_double(), 1e-12);
  }
}

TEST(MonteCarlo, DegenerateProbabilities) {
  const std::size_t v[] = {1};
  const auto all_open = conn_monte_carlo(triangle(), std::vector<double>(3, 1.0), 0, v, 1000, 5);
  EXPECT_EQ(all_open.estimate, 1.0);
  const auto all_closed = conn_monte_carlo(triangle(), std::vector<double>(3, 0.0), 0, v, 1000, 5);
  EXPECT_EQ(all_closed.estimate, 0.0);
  EXPECT_EQ(all_open.generator, "philox4x32-10");
  EXPECT_THROW(conn_monte_carlo(triangle(), std::vector<double>(3, 0.5), 0, v, 0, 5), InvalidInput);
}

TEST(MonteCarlo, TriangleEstimateAndWorkerIndependence) {
  const std::size_t v[] = {1};
  const std::vector<double> half(3, 0.5);
  const auto one = conn_monte_carlo(triangle(), half, 0, v, 1'000'000, 2024, 1);
  const auto four = conn_monte_carlo(triangle(), half, 0, v, 1'000'000, 2024, 4);
  EXPECT_NEAR(one.estimate, 0.625, 0.002);
  EXPECT_LT(one.half_width, 0.002);
  EXPECT_EQ(one.hits, four.hits);
  EXPECT_EQ(one.estimate, four.estimate);
  EXPECT_EQ(one.half_width, four.half_width);
}

}  // namespace
}  // namespace spinsync::sp
