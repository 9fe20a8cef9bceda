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

#include "spinsync/multigraph.hpp"
#include "spinsync/rational.hpp"
#include "spinsync/sp_tree.hpp"

namespace spinsync::sp {

inline constexpr std::size_t kDefaultSubsetBudget = 24;

/// Probability that u lies in the open cluster of some w in W when edge e is
/// open independently with probability gamma[e]. Enumerates open/closed
/// patterns depth first, cutting a branch once its outcome is decided.
/// Throws BudgetExceeded when |E| > edge_budget.
Rational conn_exact_subsets(const MultiGraph& g, std::span<const Rational> gamma, std::size_t u,
                            std::span<const std::size_t> targets, std::size_t edge_budget = kDefaultSubsetBudget);
double conn_exact_subsets(const MultiGraph& g, std::span<const double> gamma, std::size_t u,
                          std::span<const std::size_t> targets, std::size_t edge_budget = kDefaultSubsetBudget);

/// Two-terminal reliability by the series/parallel recursion, O(|E|).
Rational conn_sp_reliability(const SPTree& tree, std::span<const Rational> gamma);
double conn_sp_reliability(const SPTree& tree, std::span<const double> gamma);

struct MonteCarloEstimate {
  double estimate = 0;
  double half_width = 0;  // binomial 95% half-width
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string generator;
};

/// Trial i draws from counter stream i of the seeded generator, so the
/// estimate is identical for every `jobs`.
MonteCarloEstimate conn_monte_carlo(const MultiGraph& g, std::span<const double> gamma, std::size_t u,
                                    std::span<const std::size_t> targets, std::uint64_t trials, std::uint64_t seed,
                                    unsigned jobs = 1);

}  // namespace spinsync::sp
