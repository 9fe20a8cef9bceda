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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spinsync/enumeration.hpp"
#include "spinsync/f_divergence.hpp"
#include "spinsync/joint_builders.hpp"
#include "spinsync/kl_bits.hpp"
#include "spinsync/rational.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::bounds {

/// Broadcasting on a tree: the root spin is uniform and every edge flips it
/// independently with probability epsilon on the way down.
struct BotInstance {
  info::JointTable law;  // rows: root spin (+1, -1); columns: spin pattern on W
  SyncModel model;       // the synchronization model on the same tree, BSC(epsilon) edges
  std::size_t root = 0;
  std::vector<std::size_t> targets;
};

/// Builds the broadcast law by summing over all edge flip patterns and the
/// matching synchronization model. Throws InvalidInput unless `tree` is a
/// tree, W is nonempty and excludes the root, and 0 <= epsilon <= 1.
BotInstance bot_build(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                      std::span<const std::size_t> targets, std::uint64_t budget = info::kDefaultNaiveBudget);

struct BotEquivalenceReport {
  Rational bot_i2;     // I2(sigma_root; sigma_W) from the broadcast law
  Rational sot_i2;     // I2(X_root; X_W, Y_E(T)) from the definitional joint
  Rational tied_i2;    // I2(X_root; X_v | Y) on the tree with W tied to v
  KlBits bot_kl;
  KlBits sot_kl;
  KlBits tied_kl;
  bool i2_equal = false;  // all three exactly equal
  bool kl_equal = false;  // all three within 1e-9
  bool holds() const { return i2_equal && kl_equal; }
};

BotEquivalenceReport bot_equivalence_check(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                                           std::span<const std::size_t> targets,
                                           std::uint64_t budget = info::kDefaultNaiveBudget);

/// One target's column of the chain from the tied-tree path bound down to the
/// single-leaf broadcast information. Every entry should be equal.
struct EvansStep {
  std::string target;
  std::size_t path_length = 0;
  Rational path_term;         // I2(X_root; X_v | Y_P, Y_wv) on the tied graph
  Rational noiseless_swap;    // I2(X_root; X_w | Y_P, Y_wv)
  Rational tie_dropped;       // I2(X_root; X_w | Y_P)
  Rational tree_completed;    // I2(X_root; X_w | Y_E(T))
  Rational bot_single;        // I2(sigma_root; sigma_w)
  Rational path_product;      // (1 - 2 epsilon)^(2 |P|)
  KlBits bot_single_kl;
  bool equal() const {
    return path_term == noiseless_swap && noiseless_swap == tie_dropped && tie_dropped == tree_completed &&
           tree_completed == bot_single && bot_single == path_product;
  }
};

struct EvansReport {
  Rational joint_i2;     // I2(sigma_root; sigma_W)
  Rational tied_i2;      // I2(X_root; X_v | Y_E(G_W)), equal to joint_i2
  Rational path_sum;     // path-sum bound on the tied graph
  Rational sum_i2;       // sum over w of I2(sigma_root; sigma_w)
  KlBits joint_kl;
  KlBits sum_kl;
  std::vector<EvansStep> steps;
  bool i2_holds = false;     // joint_i2 <= sum_i2, exact
  bool kl_holds = false;     // joint_kl <= sum_kl + 1e-9
  bool chain_holds = false;  // every step equal, tied_i2 == joint_i2, path_sum == sum_i2
  bool holds() const { return i2_holds && kl_holds && chain_holds; }
};

EvansReport evans_subadditivity_check(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                                      std::span<const std::size_t> targets,
                                      std::uint64_t budget = info::kDefaultNaiveBudget);

}  // namespace spinsync::bounds
