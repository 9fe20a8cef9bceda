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

#include "spinsync/interpolation.hpp"

#include <array>
#include <map>

#include "spinsync/enumeration.hpp"
#include "spinsync/errors.hpp"

namespace spinsync::bounds {

namespace {

bool is_bsc(const Channel& c) {
  return c.is_binary() && c.output_size() == 2 && c.prob(0, 0) == c.prob(1, 1);
}

// E[E[A | Y_E', Y_f]^2 | Y_E' = sigma] from the normalized masses of (A, B).
Rational outcome_value(const std::array<Rational, 4>& p, const Rational& t) {
  Rational total;
  for (const int s : {1, -1}) {
    const Rational keep = (Rational(1) + t * Rational(s)) / Rational(2);  // P[Y_f = s | B = +1]
    const Rational flip = (Rational(1) - t * Rational(s)) / Rational(2);  // P[Y_f = s | B = -1]
    const Rational plus = p[0] * keep + p[1] * flip;
    const Rational minus = p[2] * keep + p[3] * flip;
    const Rational mass = plus + minus;
    if (mass.is_zero()) continue;
    total += (plus - minus) * (plus - minus) / mass;
  }
  return total;
}

}  // namespace

SyncModel with_edge_correlation(const SyncModel& model, std::size_t edge, const Rational& t) {
  if (t < Rational(0) || t > Rational(1)) throw InvalidInput("correlation t must lie in [0, 1]");
  return model.with_channel(edge, make_bsc((Rational(1) - t) / Rational(2)));
}

Rational outcome_h_direct(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& t) {
  if (t.sign() <= 0) throw InvalidInput("h(t; sigma) needs t > 0");
  const std::array<Rational, 4> p{a, b, c, d};
  return (outcome_value(p, t) - outcome_value(p, Rational(0))) / (t * t);
}

Rational outcome_h_closed(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                          const Rational& t) {
  if ((b.is_zero() && d.is_zero()) || (a.is_zero() && c.is_zero())) return Rational(0);
  const Rational cross = a * d - b * c;
  const Rational tilt = a - b + c - d;
  return 16 * cross * cross / (Rational(1) - t * t * tilt * tilt);
}

InterpolationReport interpolation_profile(const SyncModel& model, std::size_t u, std::size_t v, std::size_t edge,
                                          std::size_t grid_size, std::uint64_t budget) {
  model.require_uniform_binary("interpolation profile");
  const MultiGraph& g = model.graph();
  if (u >= g.vertex_count() || v >= g.vertex_count() || u == v) throw InvalidInput("need two distinct vertices");
  if (edge >= g.edge_count()) throw InvalidInput("edge index out of range");
  if (grid_size < 2) throw InvalidInput("grid needs at least two points");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!is_bsc(model.channel(e))) throw NotApplicable("interpolation needs BSC channels; edge " + g.edge(e).id + " is not");
  }

  InterpolationReport report;
  report.edge = g.edge(edge).id;
  const auto all = all_edges(model);
  const long last = static_cast<long>(grid_size - 1);
  for (long j = 0; j <= last; ++j) {
    InterpolationPoint point;
    point.t = Rational(j, last);
    point.i2 = info::exact_i2_conditional(with_edge_correlation(model, edge, point.t), u, v, all);
    report.points.push_back(std::move(point));
  }

  // Posterior masses of (A, B) = (X_u X_v, X_i X_j) per outcome of the other edges.
  std::vector<std::size_t> others;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e != edge) others.push_back(e);
  }
  const std::size_t fi = g.edge(edge).u;
  const std::size_t fj = g.edge(edge).v;
  std::map<std::vector<std::size_t>, std::array<Rational, 4>> masses;
  info::for_each_configuration(model, others, budget,
                               [&](std::span<const std::size_t> spins, std::span<const std::size_t> outcome,
                                   const Rational& mass) {
                                 const std::size_t a_minus = spins[u] != spins[v];
                                 const std::size_t b_minus = spins[fi] != spins[fj];
                                 auto& cell = masses[std::vector<std::size_t>(outcome.begin(), outcome.end())];
                                 cell[2 * a_minus + b_minus] += mass;
                               });

  report.outcomes = masses.size();
  bool per_outcome = true;
  std::vector<Rational> value_sum(report.points.size());
  for (auto& [key, cell] : masses) {
    const Rational total = cell[0] + cell[1] + cell[2] + cell[3];
    std::array<Rational, 4> p;
    for (std::size_t k = 0; k < 4; ++k) p[k] = cell[k] / total;
    if ((p[1].is_zero() && p[3].is_zero()) || (p[0].is_zero() && p[2].is_zero())) ++report.zero_branch_outcomes;
    for (std::size_t j = 0; j < report.points.size(); ++j) {
      const Rational& t = report.points[j].t;
      value_sum[j] += total * outcome_value(p, t);
      if (j == 0) continue;
      const Rational direct = outcome_h_direct(p[0], p[1], p[2], p[3], t);
      per_outcome = per_outcome && direct == outcome_h_closed(p[0], p[1], p[2], p[3], t);
      report.points[j].outcome_sum += total * direct;
    }
  }
  report.per_outcome_matches = per_outcome;

  const Rational i0 = report.points.front().i2;
  const Rational i1 = report.points.back().i2;
  report.degenerate = i0 == i1;
  bool aggregate = true;
  bool nonneg = true;
  bool nonpos = true;
  for (std::size_t j = 0; j < report.points.size(); ++j) {
    InterpolationPoint& p = report.points[j];
    const Rational rise = p.i2 - i0;
    aggregate = aggregate && value_sum[j] == p.i2 && rise == p.t * p.t * p.outcome_sum;
    nonneg = nonneg && rise.sign() >= 0;
    nonpos = nonpos && rise.sign() <= 0;
    if (report.degenerate) report.constant_if_degenerate = report.constant_if_degenerate && rise.is_zero();
    if (j > 0 && !report.degenerate) p.h = rise / ((i1 - i0) * p.t * p.t);
  }
  report.aggregate_matches = aggregate;
  report.sign_consistent = nonneg || nonpos;
  if (!report.degenerate) {
    bool monotone = true;
    for (std::size_t j = 2; j < report.points.size(); ++j) monotone = monotone && *report.points[j - 1].h <= *report.points[j].h;
    report.h_monotone = monotone;
    report.h_one_at_end = *report.points.back().h == Rational(1);
  }
  return report;
}

}  // namespace spinsync::bounds
