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
#include <string>
#include <vector>

#include "spinsync/joint_builders.hpp"
#include "spinsync/rational.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::bounds {

/// Edge f's BSC replaced by the one with correlation t (flip probability (1 - t) / 2).
SyncModel with_edge_correlation(const SyncModel& model, std::size_t edge, const Rational& t);

/// h(t; sigma) = (E[E[A | Y_t]^2 | sigma] - E[E[A | Y_0]^2 | sigma]) / t^2
/// from the posterior masses a, b, c, d of (A, B) = (+,+), (+,-), (-,+), (-,-),
/// computed by summing over Y_f directly. Requires t > 0.
Rational outcome_h_direct(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& t);
/// 16 (ad - bc)^2 / (1 - t^2 (a - b + c - d)^2), or 0 when b = d = 0 or a = c = 0.
Rational outcome_h_closed(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& t);

struct InterpolationPoint {
  Rational t;
  Rational i2;                // I(t) by enumeration
  std::optional<Rational> h;  // (I(t) - I(0)) / ((I(1) - I(0)) t^2), t > 0 and I(1) != I(0)
  Rational outcome_sum;       // sum over sigma of P(sigma) h(t; sigma), t > 0
};

struct InterpolationReport {
  std::string edge;
  std::vector<InterpolationPoint> points;
  bool degenerate = false;          // I(1) == I(0)
  bool constant_if_degenerate = true;
  bool h_monotone = false;          // non-decreasing over the grid
  bool h_one_at_end = false;
  bool sign_consistent = false;     // I(t) - I(0) never changes sign
  bool per_outcome_matches = false; // direct and closed h(t; sigma) equal for every sigma and t
  bool aggregate_matches = false;   // I(t) - I(0) == t^2 * outcome_sum and E[E[A|Y]^2] agrees with I(t)
  std::size_t outcomes = 0;
  std::size_t zero_branch_outcomes = 0;  // b = d = 0 or a = c = 0
  bool holds() const {
    return per_outcome_matches && aggregate_matches && sign_consistent &&
           (degenerate ? constant_if_degenerate : (h_monotone && h_one_at_end));
  }
};

/// Sweeps the correlation of edge f over a uniform grid of [0, 1]. The model
/// needs uniform binary spins, BSC channels on every edge and terminals u, v.
InterpolationReport interpolation_profile(const SyncModel& model, std::size_t u, std::size_t v, std::size_t edge,
                                          std::size_t grid_size = 11,
                                          std::uint64_t budget = info::kDefaultNaiveBudget);

}  // namespace spinsync::bounds
