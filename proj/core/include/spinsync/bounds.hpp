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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinsync/enumeration.hpp"
#include "spinsync/kl_bits.hpp"
#include "spinsync/paths.hpp"
#include "spinsync/percolation.hpp"
#include "spinsync/rational.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::bounds {

struct BoundOptions {
  std::uint64_t state_budget = info::kDefaultStateBudget;
  std::uint64_t path_budget = sp::kDefaultPathBudget;
  std::size_t subset_budget = sp::kDefaultSubsetBudget;
  std::uint64_t monte_carlo_trials = 200'000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool want_symmetric = true;
  bool want_sdpi = true;
};

/// Connection probability conn_{G,gamma}(u, W) and how it was obtained.
/// `method` is "subsets", "series-parallel" or "monte-carlo"; only the first
/// two are exact, a Monte Carlo value comes with its estimate record.
struct PercolationBound {
  std::optional<Rational> exact;
  double value = 0;
  std::string method;
  std::optional<sp::MonteCarloEstimate> estimate;
};

/// Exact percolation first (open/closed subsets within the edge budget, then
/// the series/parallel recursion on the pair or tied pair), Monte Carlo last.
PercolationBound connection_probability(const MultiGraph& g, std::span<const Rational> gamma, std::size_t u,
                                        std::span<const std::size_t> targets, const BoundOptions& options = {});
PercolationBound connection_probability(const MultiGraph& g, std::span<const double> gamma, std::size_t u,
                                        std::span<const std::size_t> targets, const BoundOptions& options = {});

/// Sum over self-avoiding u-v paths of the product of per-edge I2 values,
/// which is the I2 of the path model. Uniform binary spins only.
Rational path_sum_bound(const SyncModel& model, std::size_t u, std::size_t v,
                        std::uint64_t path_budget = sp::kDefaultPathBudget);

/// conn_{G,gamma}(u, W) with gamma(e) = I2 of edge e. Throws NotApplicable
/// when some channel has no output involution.
PercolationBound symmetric_percolation_bound(const SyncModel& model, std::size_t u,
                                             std::span<const std::size_t> targets, const BoundOptions& options = {});

/// conn_{G,eta}(u, W) with eta(e) the chi-squared SDPI constant of edge e.
PercolationBound sdpi_percolation_bound(const SyncModel& model, std::size_t u, std::span<const std::size_t> targets,
                                        const BoundOptions& options = {});

struct EdgeBoundRow {
  std::string id;
  std::optional<Rational> gamma_i2;
  std::optional<double> eta;
  bool symmetric = false;
};

struct BoundReport {
  std::string u;
  std::vector<std::string> targets;

  std::optional<Rational> exact_i2;
  std::optional<KlBits> exact_ikl;
  std::string exact_note;  // "skipped: budget" when absent

  std::optional<Rational> path_sum;
  std::string path_sum_note;  // "n/a: not series-parallel", ...
  std::optional<PercolationBound> symmetric_percolation;
  std::string symmetric_note;  // "n/a: asymmetric", ...
  std::optional<PercolationBound> sdpi_percolation;
  std::string sdpi_note;

  std::vector<EdgeBoundRow> edges;

  // Set only when both sides are present. A false value is a finding.
  std::optional<bool> path_sum_holds;
  std::optional<bool> symmetric_holds;
  std::optional<bool> sdpi_holds;  // I_KL <= conn within 1e-6

  bool all_hold() const {
    return path_sum_holds.value_or(true) && symmetric_holds.value_or(true) && sdpi_holds.value_or(true);
  }
};

/// Every applicable bound for I(X_u; X_W | Y) next to the exact value. A set
/// W with more than one vertex is first tied to a fresh vertex through
/// noiseless edges. Inapplicable bounds carry a note instead of a value.
BoundReport evaluate_bounds(const SyncModel& model, std::size_t u, std::span<const std::size_t> targets,
                            const BoundOptions& options = {});

/// Exact I2 against the path sum on the model's terminals. Throws
/// NotApplicable unless the terminals make the graph series-parallel and
/// spins are uniform binary.
BoundReport verify_path_sum(const SyncModel& model, const BoundOptions& options = {});

}  // namespace spinsync::bounds
