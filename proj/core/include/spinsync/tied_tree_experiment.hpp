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
#include "spinsync/rational.hpp"

namespace spinsync::bounds {

enum class TiedTreeMode { Exact, Collapsed, Analytic };

std::string to_string(TiedTreeMode mode);
TiedTreeMode parse_tied_tree_mode(const std::string& text);

/// Regular tree of branching d and depth t whose edges carry Q(1|+1) = a/n,
/// Q(1|-1) = b/n, with every leaf tied to a terminal by a noiseless edge.
struct TiedTreeRow {
  Rational a;
  Rational b;
  long n = 0;
  std::size_t depth = 0;
  std::size_t d = 0;
  TiedTreeMode mode = TiedTreeMode::Analytic;

  Rational edge_i2;   // exact I2 of one tree edge
  double edge_eta = 0;  // chi-squared SDPI constant of one tree edge

  std::optional<Rational> exact_i2;  // I2(X_root; X_tie | Y), exact or collapsed modes
  std::string exact_note;

  // Path sum: d^t paths of t tree edges and one noiseless tie.
  Rational chi2_path_bound;  // (d I2)^t
  Rational chi2_leading;     // d (a-b)^2 / (2 (a+b) n)
  Rational chi2_remainder;   // d I2 - chi2_leading, the o-term
  bool chi2_path_checked = false;  // path_sum_bound on the built graph agreed (exact/collapsed modes)

  double sdpi_union = 0;         // (d eta)^t
  double sdpi_union_capped = 0;  // min(1, sdpi_union)
  double sdpi_leading = 0;       // d (sqrt a - sqrt b)^2 / n
  double sdpi_remainder = 0;     // d eta - sdpi_leading
  double sdpi_conn = 0;          // conn of the tied tree with gamma = eta, by level recursion
  double sdpi_ie_lower = 0;      // first two inclusion-exclusion terms over the path pairs
  double sdpi_ie_lower_closed = 0;  // the same bound in the closed form (1 - (gd)^(t+1)) / (1 - gd)
  bool sdpi_conn_checked = false;   // series-parallel reliability on the built graph agreed

  bool chi2_below_sdpi = false;     // chi2_path_bound < sdpi_union
  bool exact_below_chi2 = false;    // exact_i2 <= chi2_path_bound, when exact_i2 is present
  bool ie_below_conn = false;       // sdpi_ie_lower <= sdpi_conn <= sdpi_union (within 1e-12)
};

struct TiedTreeTable {
  std::vector<TiedTreeRow> rows;
};

struct TiedTreeOptions {
  TiedTreeMode mode = TiedTreeMode::Analytic;
  std::uint64_t state_budget = info::kDefaultStateBudget;
  unsigned jobs = 1;
};

/// One row per (n, t). Exact mode enumerates the tied tree, collapsed mode
/// folds it into one channel; both also recompute the path sum and the
/// percolation on the built graph. A row whose enumeration exceeds the budget
/// carries "skipped: budget" in `exact_note`.
TiedTreeTable tied_tree_experiment(const Rational& a, const Rational& b, std::span<const long> n_list,
                                   std::span<const std::size_t> depth_list, std::size_t d,
                                   const TiedTreeOptions& options = {});

/// Same with d = n on every row.
TiedTreeTable tied_tree_experiment_d_equals_n(const Rational& a, const Rational& b, std::span<const long> n_list,
                                              std::span<const std::size_t> depth_list,
                                              const TiedTreeOptions& options = {});

}  // namespace spinsync::bounds
