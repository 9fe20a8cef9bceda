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

#include "spinsync/bot.hpp"
#include "spinsync/errors.hpp"
#include "support/oracles.hpp"

namespace spinsync::bounds {
namespace {

MultiGraph path_tree(std::size_t edges) {
  std::vector<std::string> names{"r"};
  std::vector<MultiGraph::EdgeSpec> spec;
  for (std::size_t i = 1; i <= edges; ++i) {
    names.push_back("x" + std::to_string(i));
    spec.push_back({"e" + std::to_string(i), names[i - 1], names[i]});
  }
  return MultiGraph(names, spec);
}

MultiGraph star(std::size_t leaves) {
  std::vector<std::string> names{"r"};
  std::vector<MultiGraph::EdgeSpec> spec;
  for (std::size_t i = 1; i <= leaves; ++i) {
    names.push_back("l" + std::to_string(i));
    spec.push_back({"e" + std::to_string(i), "r", names[i]});
  }
  return MultiGraph(names, spec);
}

TEST(BotBuild, SingleEdgeIsOneBsc) {
  const Rational eps(1, 10);
  const std::size_t leaf[] = {1};
  const BotInstance bot = bot_build(path_tree(1), 0, eps, leaf);
  EXPECT_EQ(bot.law.mass(0, 0), Rational(9, 20));
  EXPECT_EQ(bot.law.mass(0, 1), Rational(1, 20));
  EXPECT_EQ(bot.law.mass(1, 0), Rational(1, 20));
  EXPECT_EQ(bot.law.mass(1, 1), Rational(9, 20));
  EXPECT_EQ(bot.law.chi2_information(), Rational(16, 25));
}

TEST(BotBuild, DepthTwoPathMultiplies) {
  const std::size_t leaf[] = {2};
  const BotInstance bot = bot_build(path_tree(2), 0, Rational(1, 10), leaf);
  EXPECT_EQ(bot.law.chi2_information(), pow(Rational(4, 5), 4));
}

TEST(BotBuild, StarLeavesAreIndependentFlipsOfTheRoot) {
  const Rational eps(1, 5);
  const std::vector<std::size_t> leaves = {1, 2, 3};
  const BotInstance bot = bot_build(star(3), 0, eps, leaves);
  for (std::size_t root = 0; root < 2; ++root) {
    for (std::size_t col = 0; col < 8; ++col) {
      Rational expected(1, 2);
      for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t spin = col >> (2 - i) & 1;
        expected *= spin == root ? Rational(1) - eps : eps;
      }
      EXPECT_EQ(bot.law.mass(root, col), expected);
    }
  }
}

TEST(BotBuild, RejectsBadInput) {
  const std::size_t root_only[] = {0};
  EXPECT_THROW(bot_build(path_tree(2), 0, Rational(1, 4), root_only), InvalidInput);
  const std::size_t leaf[] = {1};
  EXPECT_THROW(bot_build(path_tree(1), 0, Rational(3, 2), leaf), InvalidInput);
  const MultiGraph cycle({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "a"}});
  EXPECT_THROW(bot_build(cycle, 0, Rational(1, 4), leaf), InvalidInput);
}

TEST(BotEquivalence, StarWithTwoLeavesAndExtremes) {
  const std::vector<std::size_t> leaves = {1, 2};
  const BotEquivalenceReport r = bot_equivalence_check(star(2), 0, Rational(1, 10), leaves);
  EXPECT_TRUE(r.holds());
  // Root and two conditionally independent BSC(1/10) views: computed by hand.
  EXPECT_EQ(r.bot_i2, Rational(32, 41));
  const BotEquivalenceReport half = bot_equivalence_check(star(2), 0, Rational(1, 2), leaves);
  EXPECT_TRUE(half.holds());
  EXPECT_EQ(half.bot_i2, Rational(0));
  const BotEquivalenceReport zero = bot_equivalence_check(star(2), 0, Rational(0), leaves);
  EXPECT_TRUE(zero.holds());
  EXPECT_EQ(zero.bot_i2, Rational(1));
}

TEST(BotEquivalence, AllSmallTreesAndTargetSets) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const MultiGraph& tree : spinsync::testing::all_labeled_trees(n)) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<std::size_t> targets;
        for (std::size_t i = 1; i < n; ++i) {
          if (mask >> (i - 1) & 1) targets.push_back(i);
        }
        ASSERT_TRUE(bot_equivalence_check(tree, 0, Rational(1, 5), targets).holds());
      }
    }
  }
}

TEST(Evans, BinaryTreeDepthTwo) {
  const MultiGraph tree = regular_tree(2, 2);
  const std::vector<std::size_t> leaves = {3, 4, 5, 6};
  const EvansReport r = evans_subadditivity_check(tree, 0, Rational(1, 5), leaves);
  EXPECT_TRUE(r.holds());
  EXPECT_LT(r.joint_i2, r.sum_i2);
  EXPECT_EQ(r.sum_i2, 4 * pow(Rational(3, 5), 4));
  ASSERT_EQ(r.steps.size(), 4u);
  for (const EvansStep& s : r.steps) {
    EXPECT_TRUE(s.equal());
    EXPECT_EQ(s.path_length, 2u);
  }
}

TEST(Evans, SingleTargetIsEqualityAndNoiselessCountsEachLeaf) {
  const std::size_t one[] = {2};
  const EvansReport single = evans_subadditivity_check(path_tree(3), 0, Rational(1, 10), one);
  EXPECT_TRUE(single.holds());
  EXPECT_EQ(single.joint_i2, single.sum_i2);

  const std::vector<std::size_t> leaves = {1, 2, 3};
  const EvansReport noiseless = evans_subadditivity_check(star(3), 0, Rational(0), leaves);
  EXPECT_TRUE(noiseless.holds());
  EXPECT_EQ(noiseless.joint_i2, Rational(1));
  EXPECT_EQ(noiseless.sum_i2, Rational(3));
}

TEST(Evans, InternalTargetsKeepTheChain) {
  const std::vector<std::size_t> targets = {1, 3};
  const EvansReport r = evans_subadditivity_check(regular_tree(2, 2), 0, Rational(2, 5), targets);
  EXPECT_TRUE(r.holds());
}

}  // namespace
}  // namespace spinsync::bounds
