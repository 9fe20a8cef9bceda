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
#include <functional>
#include <span>
#include <vector>

#include "spinsync/f_divergence.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::info {

// Definitional, fully materialized joints of a synchronization model. They
// enumerate every spin configuration against every observation outcome in
// exact arithmetic, with no symmetry or sufficiency reduction; they serve as
// the reference route for the streaming engine in enumeration.hpp and for
// identities stated on explicit joints.

inline constexpr std::uint64_t kDefaultNaiveBudget = std::uint64_t{1} << 22;

using ConfigurationVisitor =
    std::function<void(std::span<const std::size_t> spins, std::span<const std::size_t> outcome, const Rational& mass)>;

/// Visits every (spin configuration, outcome of the observed edges) pair of
/// nonzero probability. Throws BudgetExceeded when k^|V| * prod |A_e| > budget.
void for_each_configuration(const SyncModel& model, std::span<const std::size_t> observed, std::uint64_t budget,
                            const ConfigurationVisitor& visit);

/// Joint of X_u (rows) against (X_W, Y_observed) (columns).
JointTable spin_vs_evidence_joint(const SyncModel& model, std::size_t u, std::span<const std::size_t> conditioning,
                                  std::span<const std::size_t> observed,
                                  std::uint64_t budget = kDefaultNaiveBudget);

/// Joint of the spin difference X_u - X_v (X_u X_v for binary spins) against Y_observed.
JointTable difference_vs_observation_joint(const SyncModel& model, std::size_t u, std::size_t v,
                                           std::span<const std::size_t> observed,
                                           std::uint64_t budget = kDefaultNaiveBudget);

/// One table per observation outcome: the joint mass of (X_u, X_v, Y = y).
std::vector<JointTable> conditional_pair_tables(const SyncModel& model, std::size_t u, std::size_t v,
                                                std::span<const std::size_t> observed,
                                                std::uint64_t budget = kDefaultNaiveBudget);

/// One table per observation outcome: the joint mass of (X_u, X_W, Y = y),
/// columns indexed by the spin pattern on W.
std::vector<JointTable> conditional_set_tables(const SyncModel& model, std::size_t u,
                                               std::span<const std::size_t> conditioning,
                                               std::span<const std::size_t> observed,
                                               std::uint64_t budget = kDefaultNaiveBudget);

}  // namespace spinsync::info
