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

#include "spinsync/tied_tree_experiment.hpp"

#include <algorithm>
#include <cmath>

#include "spinsync/bounds.hpp"
#include "spinsync/errors.hpp"
#include "spinsync/mutual_info.hpp"
#include "spinsync/percolation.hpp"
#include "spinsync/sdpi.hpp"
#include "spinsync/sp_collapse.hpp"
#include "spinsync/sp_tree.hpp"
#include "spinsync/sync_model.hpp"
#include "spinsync/tied_tree.hpp"

namespace spinsync::bounds {

namespace {

constexpr std::size_t kMaxBuiltVertices = 200'000;

std::size_t tree_size(std::size_t d, std::size_t t) {
  std::size_t total = 1;
  std::size_t level = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (level > kMaxBuiltVertices / std::max<std::size_t>(d, 1)) return kMaxBuiltVertices + 1;
    level *= d;
    total += level;
  }
  return total;
}

void fill_built(TiedTreeRow& row, const Channel& channel, const TiedTreeOptions& options) {
  if (tree_size(row.d, row.depth) > kMaxBuiltVertices) {
    row.exact_note = "skipped: size";
    return;
  }
  const MultiGraph tree = regular_tree(row.d, row.depth);
  const SyncModel tied =
      sp::tied_tree_build(SyncModel(tree, std::vector<Channel>(tree.edge_count(), channel)), 0);
  const std::size_t tie = tied.graph().terminals()->second;
  const auto decomposition = sp::sp_recognize(tied.graph());
  if (!decomposition) throw Error("tied tree failed series-parallel recognition");

  try {
    if (row.mode == TiedTreeMode::Exact) {
      info::EnumerationOptions enumeration;
      enumeration.state_budget = options.state_budget;
      enumeration.jobs = options.jobs;
      enumeration.want_kl = false;
      row.exact_i2 = info::exact_i2_conditional(tied, 0, tie, all_edges(tied), enumeration);
    } else {
      row.exact_i2 = info::edge_i2(sp::sp_collapse_to_channel(
          tied, *decomposition, std::min(options.state_budget, sp::kDefaultCollapseBudget)));
    }
  } catch (const BudgetExceeded&) {
    row.exact_note = "skipped: budget";
  }

  row.chi2_path_checked = path_sum_bound(tied, 0, tie) == row.chi2_path_bound;
  std::vector<double> gamma(tied.graph().edge_count(), 1.0);
  std::fill_n(gamma.begin(), tree.edge_count(), row.edge_eta);
  const double conn = sp::conn_sp_reliability(*decomposition, std::span<const double>(gamma));
  row.sdpi_conn_checked = std::abs(conn - row.sdpi_conn) <= 1e-12;
}

TiedTreeRow make_row(const Rational& a, const Rational& b, long n, std::size_t t, std::size_t d,
                     const TiedTreeOptions& options) {
  if (n <= 0 || d == 0) throw InvalidInput("tied tree needs n > 0 and d > 0");
  TiedTreeRow row;
  row.a = a;
  row.b = b;
  row.n = n;
  row.depth = t;
  row.d = d;
  row.mode = options.mode;

  const Channel channel = make_bernoulli_pair(a, b, n);
  row.edge_i2 = info::edge_i2(channel);
  row.edge_eta = info::sdpi_chi2(channel);
  const auto depth = static_cast<unsigned>(t);
  const Rational dr(static_cast<long>(d));
  const Rational diff = a - b;
  row.chi2_leading = a + b == Rational(0) ? Rational(0) : dr * diff * diff / (2 * (a + b) * Rational(n));
  row.chi2_remainder = dr * row.edge_i2 - row.chi2_leading;
  row.chi2_path_bound = pow(row.chi2_leading + row.chi2_remainder, depth);

  const double g = row.edge_eta;
  const double dd = static_cast<double>(d);
  const double root_gap = std::sqrt(a.to_double()) - std::sqrt(b.to_double());
  row.sdpi_leading = dd * root_gap * root_gap / static_cast<double>(n);
  row.sdpi_remainder = dd * g - row.sdpi_leading;
  row.sdpi_union = std::pow(row.sdpi_leading + row.sdpi_remainder, static_cast<double>(t));
  row.sdpi_union_capped = std::min(1.0, row.sdpi_union);

  double conn = 1.0;
  for (std::size_t level = 0; level < t; ++level) conn = 1.0 - std::pow(1.0 - g * conn, dd);
  row.sdpi_conn = conn;

  const double first = std::pow(dd * g, static_cast<double>(t));
  double pair_sum = 0;
  for (std::size_t k = 1; k <= t; ++k) {
    pair_sum += std::pow(g, static_cast<double>(k)) * (dd - 1) * std::pow(dd, static_cast<double>(k - 1));
  }
  row.sdpi_ie_lower = first - first / 2 * pair_sum;
  const double x = g * dd;
  const double geometric = x == 1.0 ? static_cast<double>(t + 1) : (1 - std::pow(x, static_cast<double>(t + 1))) / (1 - x);
  row.sdpi_ie_lower_closed = first * (1 - (dd - 1) * geometric / (2 * dd));

  if (row.mode != TiedTreeMode::Analytic) fill_built(row, channel, options);

  row.chi2_below_sdpi = row.chi2_path_bound.to_double() < row.sdpi_union;
  if (row.exact_i2) row.exact_below_chi2 = *row.exact_i2 <= row.chi2_path_bound;
  row.ie_below_conn = row.sdpi_ie_lower <= row.sdpi_conn + 1e-12 && row.sdpi_conn <= row.sdpi_union + 1e-12;
  return row;
}

}  // namespace

std::string to_string(TiedTreeMode mode) {
  switch (mode) {
    case TiedTreeMode::Exact:
      return "exact";
    case TiedTreeMode::Collapsed:
      return "collapsed";
    case TiedTreeMode::Analytic:
      return "analytic";
  }
  return "analytic";
}

TiedTreeMode parse_tied_tree_mode(const std::string& text) {
  if (text == "exact") return TiedTreeMode::Exact;
  if (text == "collapsed") return TiedTreeMode::Collapsed;
  if (text == "analytic") return TiedTreeMode::Analytic;
  throw InvalidInput("unknown tied-tree mode '" + text + "' (expected exact, collapsed or analytic)");
}

TiedTreeTable tied_tree_experiment(const Rational& a, const Rational& b, std::span<const long> n_list,
                                   std::span<const std::size_t> depth_list, std::size_t d,
                                   const TiedTreeOptions& options) {
  TiedTreeTable table;
  for (const long n : n_list) {
    for (const std::size_t t : depth_list) table.rows.push_back(make_row(a, b, n, t, d, options));
  }
  return table;
}

TiedTreeTable tied_tree_experiment_d_equals_n(const Rational& a, const Rational& b, std::span<const long> n_list,
                                              std::span<const std::size_t> depth_list,
                                              const TiedTreeOptions& options) {
  TiedTreeTable table;
  for (const long n : n_list) {
    for (const std::size_t t : depth_list) {
      table.rows.push_back(make_row(a, b, n, t, static_cast<std::size_t>(n), options));
    }
  }
  return table;
}

}  // namespace spinsync::bounds
