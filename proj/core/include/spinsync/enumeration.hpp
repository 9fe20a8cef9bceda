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
#include <vector>

#include "spinsync/kl_bits.hpp"
#include "spinsync/rational.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::info {

inline constexpr std::uint64_t kDefaultStateBudget = std::uint64_t{1} << 26;

enum class EnumerationStrategy {
  Auto,       // Stream when its state count fits the budget, otherwise Eliminate
  Stream,     // every outcome against every spin configuration
  Eliminate,  // vertex elimination, merging proportional partial likelihoods
};

struct EnumerationOptions {
  std::uint64_t state_budget = kDefaultStateBudget;
  EnumerationStrategy strategy = EnumerationStrategy::Auto;
  unsigned jobs = 1;
  bool merge_outputs = true;
  bool want_kl = true;
};

/// Conditional information I(X_u; X_v | Y_observed) in both divergences.
struct ConditionalInfo {
  Rational chi2;
  KlBits kl;
  std::uint64_t states = 0;    // Stream: reduced state count; Eliminate: peak live entries
  std::uint64_t outcomes = 0;  // observation outcomes of nonzero probability
};

/// Exact I(X_u; X_v | Y_observed). Before enumerating, outputs are merged to
/// sufficient statistics, information-free edges are dropped and only the
/// connected component of u through observed edges is kept. The streaming
/// engine accumulates the posterior joint of (X_u, X_v) per outcome; the
/// elimination engine sums out vertices one at a time and merges outcome
/// prefixes whose partial likelihoods are proportional. Results do not depend
/// on `jobs`.
ConditionalInfo exact_conditional_info(const SyncModel& model, std::size_t u, std::size_t v,
                                       std::span<const std::size_t> observed,
                                       const EnumerationOptions& options = {});

Rational exact_i2_conditional(const SyncModel& model, std::size_t u, std::size_t v,
                              std::span<const std::size_t> observed, const EnumerationOptions& options = {});

KlBits exact_ikl_conditional(const SyncModel& model, std::size_t u, std::size_t v,
                             std::span<const std::size_t> observed, const EnumerationOptions& options = {});

/// Reduced state count the engine would enumerate; saturates at UINT64_MAX.
std::uint64_t enumeration_states(const SyncModel& model, std::size_t u, std::size_t v,
                                 std::span<const std::size_t> observed, const EnumerationOptions& options = {});

struct SandwichReport {
  Rational i2;
  KlBits ikl;
  bool lower_holds = false;  // I2 / 2 <= I_KL
  bool upper_holds = false;  // I_KL <= I2
  bool holds() const { return lower_holds && upper_holds; }
};

SandwichReport sandwich_check(const SyncModel& model, std::size_t u, std::size_t v,
                              std::span<const std::size_t> observed, const EnumerationOptions& options = {});

}  // namespace spinsync::info
