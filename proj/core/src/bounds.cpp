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

#include "spinsync/bounds.hpp"

#include <algorithm>
#include <type_traits>

#include "spinsync/errors.hpp"
#include "spinsync/mutual_info.hpp"
#include "spinsync/sdpi.hpp"
#include "spinsync/sp_tree.hpp"

namespace spinsync::bounds {

namespace {

std::optional<sp::SPTree> recognize(const MultiGraph& g, std::size_t u, std::size_t v) {
  try {
    return sp::sp_recognize(g, u, v);
  } catch (const InvalidInput&) {
    return std::nullopt;  // disconnected
  }
}

double to_double(const Rational& r) { return r.to_double(); }
double to_double(double d) { return d; }

template <class T>
void set_value(PercolationBound& out, const T& value) {
  if constexpr (std::is_same_v<T, Rational>) {
    out.exact = value;
    out.value = value.to_double();
  } else {
    out.value = value;
  }
}

template <class T>
PercolationBound connection(const MultiGraph& g, std::span<const T> gamma, std::size_t u,
                            std::span<const std::size_t> targets, const BoundOptions& options) {
  PercolationBound out;
  if (std::find(targets.begin(), targets.end(), u) != targets.end()) {
    out.method = "subsets";
    set_value(out, T(1));
    return out;
  }
  if (g.edge_count() <= options.subset_budget) {
    out.method = "subsets";
    set_value(out, sp::conn_exact_subsets(g, gamma, u, targets, options.subset_budget));
    return out;
  }
  MultiGraph tied = g;
  std::vector<T> tied_gamma(gamma.begin(), gamma.end());
  std::size_t sink = targets.front();
  if (targets.size() > 1) {
    sink = tied.add_vertex(tied.fresh_vertex_name("tie"));
    for (const std::size_t w : targets) {
      tied.add_edge(tied.fresh_edge_id("tie"), w, sink);
      tied_gamma.push_back(T(1));
    }
  }
  if (const auto tree = recognize(tied, u, sink)) {
    out.method = "series-parallel";
    set_value(out, sp::conn_sp_reliability(*tree, std::span<const T>(tied_gamma)));
    return out;
  }
  std::vector<double> approx;
  for (const T& x : gamma) approx.push_back(to_double(x));
  out.method = "monte-carlo";
  out.estimate = sp::conn_monte_carlo(g, approx, u, targets, options.monte_carlo_trials, options.seed, options.jobs);
  out.value = out.estimate->estimate;
  return out;
}

bool all_symmetric(const SyncModel& model) {
  return std::all_of(model.channels().begin(), model.channels().end(),
                     [](const Channel& c) { return detect_symmetry(c).has_value(); });
}

// Upper end of a percolation value: exact, or estimate plus its half-width.
double upper(const PercolationBound& b) {
  return b.estimate ? b.estimate->estimate + b.estimate->half_width : b.value;
}

void check_set(const SyncModel& model, std::size_t u, std::span<const std::size_t> targets) {
  const std::size_t n = model.graph().vertex_count();
  if (u >= n) throw InvalidInput("vertex index out of range");
  if (targets.empty()) throw InvalidInput("vertex set W is empty");
  for (const std::size_t w : targets) {
    if (w >= n) throw InvalidInput("vertex index out of range");
    if (w == u) throw InvalidInput("u must not belong to W");
  }
}

}  // namespace

PercolationBound connection_probability(const MultiGraph& g, std::span<const Rational> gamma, std::size_t u,
                                        std::span<const std::size_t> targets, const BoundOptions& options) {
  return connection<Rational>(g, gamma, u, targets, options);
}

PercolationBound connection_probability(const MultiGraph& g, std::span<const double> gamma, std::size_t u,
                                        std::span<const std::size_t> targets, const BoundOptions& options) {
  return connection<double>(g, gamma, u, targets, options);
}

Rational path_sum_bound(const SyncModel& model, std::size_t u, std::size_t v, std::uint64_t path_budget) {
  model.require_uniform_binary("path-sum bound");
  std::vector<Rational> gamma;
  for (const Channel& c : model.channels()) gamma.push_back(info::edge_i2(c));
  RationalSum total;
  sp::for_each_path(model.graph(), u, v, path_budget, [&](std::span<const std::size_t> path) {
    Rational product(1);
    for (const std::size_t e : path) {
      product *= gamma[e];
      if (product.is_zero()) return;
    }
    total.add(product);
  });
  return total.total();
}

PercolationBound symmetric_percolation_bound(const SyncModel& model, std::size_t u,
                                             std::span<const std::size_t> targets, const BoundOptions& options) {
  model.require_uniform_binary("symmetric percolation bound");
  check_set(model, u, targets);
  for (std::size_t e = 0; e < model.graph().edge_count(); ++e) {
    if (!detect_symmetry(model.channel(e))) {
      throw NotApplicable("symmetric percolation bound needs symmetric channels; edge " + model.graph().edge(e).id +
                          " is asymmetric");
    }
  }
  std::vector<Rational> gamma;
  for (const Channel& c : model.channels()) gamma.push_back(info::edge_i2(c));
  return connection_probability(model.graph(), std::span<const Rational>(gamma), u, targets, options);
}

PercolationBound sdpi_percolation_bound(const SyncModel& model, std::size_t u, std::span<const std::size_t> targets,
                                        const BoundOptions& options) {
  model.require_uniform_binary("SDPI percolation bound");
  check_set(model, u, targets);
  std::vector<double> gamma;
  for (const Channel& c : model.channels()) gamma.push_back(std::clamp(info::sdpi_chi2(c), 0.0, 1.0));
  return connection_probability(model.graph(), std::span<const double>(gamma), u, targets, options);
}

BoundReport evaluate_bounds(const SyncModel& model, std::size_t u, std::span<const std::size_t> targets,
                            const BoundOptions& options) {
  check_set(model, u, targets);
  const MultiGraph& g = model.graph();
  BoundReport report;
  report.u = g.vertex_name(u);
  for (const std::size_t w : targets) report.targets.push_back(g.vertex_name(w));

  const TiedModel tied = tie_vertex_set(model, targets);
  info::EnumerationOptions enumeration;
  enumeration.state_budget = options.state_budget;
  enumeration.jobs = options.jobs;
  try {
    const info::ConditionalInfo exact =
        info::exact_conditional_info(tied.model, u, tied.target, all_edges(tied.model), enumeration);
    report.exact_i2 = exact.chi2;
    report.exact_ikl = exact.kl;
  } catch (const BudgetExceeded&) {
    report.exact_note = "skipped: budget";
  }

  const bool binary_inputs = model.group().is_binary();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    EdgeBoundRow row;
    row.id = g.edge(e).id;
    if (binary_inputs) {
      row.gamma_i2 = info::edge_i2(model.channel(e));
      if (options.want_sdpi) row.eta = info::sdpi_chi2(model.channel(e));
      row.symmetric = detect_symmetry(model.channel(e)).has_value();
    }
    report.edges.push_back(std::move(row));
  }

  if (!model.is_uniform_binary()) {
    report.path_sum_note = report.symmetric_note = report.sdpi_note = "n/a: requires uniform binary spins";
    return report;
  }

  if (!recognize(tied.model.graph(), u, tied.target)) {
    report.path_sum_note = "n/a: not series-parallel";
  } else {
    try {
      report.path_sum = path_sum_bound(tied.model, u, tied.target, options.path_budget);
    } catch (const BudgetExceeded&) {
      report.path_sum_note = "skipped: path budget";
    }
  }

  if (!options.want_symmetric) {
    report.symmetric_note = "not requested";
  } else if (!all_symmetric(model)) {
    report.symmetric_note = "n/a: asymmetric";
  } else {
    report.symmetric_percolation = symmetric_percolation_bound(model, u, targets, options);
  }

  if (!options.want_sdpi) {
    report.sdpi_note = "not requested";
  } else {
    report.sdpi_percolation = sdpi_percolation_bound(model, u, targets, options);
  }

  if (report.exact_i2) {
    if (report.path_sum) report.path_sum_holds = *report.exact_i2 <= *report.path_sum;
    if (const auto& b = report.symmetric_percolation) {
      report.symmetric_holds = b->exact ? *report.exact_i2 <= *b->exact : report.exact_i2->to_double() <= upper(*b);
    }
    if (const auto& b = report.sdpi_percolation) {
      report.sdpi_holds = report.exact_ikl->to_double() <= upper(*b) + 1e-6;
    }
  }
  return report;
}

BoundReport verify_path_sum(const SyncModel& model, const BoundOptions& options) {
  model.require_uniform_binary("series-parallel path-sum bound");
  const auto& terminals = model.graph().terminals();
  if (!terminals) throw InvalidInput("model has no terminals");
  if (!recognize(model.graph(), terminals->first, terminals->second)) {
    throw NotApplicable("graph is not series-parallel with terminals " + model.graph().vertex_name(terminals->first) +
                        ", " + model.graph().vertex_name(terminals->second));
  }
  BoundOptions narrow = options;
  narrow.want_symmetric = false;
  narrow.want_sdpi = false;
  const std::size_t target = terminals->second;
  return evaluate_bounds(model, terminals->first, std::span<const std::size_t>(&target, 1), narrow);
}

}  // namespace spinsync::bounds
