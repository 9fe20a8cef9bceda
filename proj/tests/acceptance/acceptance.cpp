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

// Acceptance checks. Prints one PASS/FAIL line per criterion; `--only N`
// runs a single criterion. Exit status is 0 only when every run criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "spinsync/bot.hpp"
#include "spinsync/bounds.hpp"
#include "spinsync/channel.hpp"
#include "spinsync/counterexamples.hpp"
#include "spinsync/enumeration.hpp"
#include "spinsync/f_divergence.hpp"
#include "spinsync/fuzz.hpp"
#include "spinsync/interpolation.hpp"
#include "spinsync/joint_builders.hpp"
#include "spinsync/mutual_info.hpp"
#include "spinsync/paths.hpp"
#include "spinsync/percolation.hpp"
#include "spinsync/random.hpp"
#include "spinsync/random_models.hpp"
#include "spinsync/sdpi.hpp"
#include "spinsync/sp_collapse.hpp"
#include "spinsync/sp_tree.hpp"
#include "spinsync/tied_tree.hpp"
#include "spinsync/tied_tree_experiment.hpp"
#include "support/oracles.hpp"

namespace {

using namespace spinsync;
using gen::ChannelKind;

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  void note(std::string text) { notes_ = std::move(text); }

  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (!notes_.empty()) s += ", " + notes_;
    if (!ok()) s += ", " + std::to_string(failures_) + " failed, first: " + first_;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string notes_;
};

std::vector<std::size_t> all_edge_indices(const MultiGraph& g) {
  std::vector<std::size_t> e(g.edge_count());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = i;
  return e;
}

std::vector<Rational> edge_gammas(const SyncModel& m) {
  std::vector<Rational> gamma;
  for (const Channel& c : m.channels()) gamma.push_back(info::edge_i2(c));
  return gamma;
}

// Var[E[U|A]] / Var[U] for U ~ Rad(p), computed from the posterior means.
Rational posterior_variance_ratio(const Rational& p, const Channel& q) {
  const Rational one(1);
  Rational second_moment;
  for (std::size_t y = 0; y < q.output_size(); ++y) {
    const Rational py = p * q.prob(0, y) + (one - p) * q.prob(1, y);
    if (py == Rational(0)) continue;
    const Rational mean = (p * q.prob(0, y) - (one - p) * q.prob(1, y)) / py;
    second_moment += py * mean * mean;
  }
  const Rational mu = Rational(2) * p - one;
  return (second_moment - mu * mu) / (one - mu * mu);
}

std::string tag(const char* what, std::uint64_t trial) { return std::string(what) + " at trial " + std::to_string(trial); }

// 1. Chi-squared identities on random channels and models.
void identities(Check& check) {
  constexpr std::uint64_t kChannels = 500;
  constexpr std::uint64_t kModels = 500;
  for (std::uint64_t t = 0; t < kChannels; ++t) {
    CounterRng rng(101, t);
    const Channel q1 = gen::random_channel(rng, 4);
    const Channel q2 = gen::random_channel(rng, 4);
    const Rational p = gen::random_fraction(rng, 1, 63, 64);

    const info::JointTable joint = info::channel_joint(p, q1);
    const Rational i2 = info::chi2_mi_binary(p, q1);
    check.expect(i2 == info::chi2_divergence(joint.joint_flat(), joint.product_flat()), tag("I2 vs divergence", t));
    check.expect(i2 == posterior_variance_ratio(p, q1), tag("I2 vs posterior variance", t));

    const Rational a = info::edge_i2(q1);
    const Rational b = info::edge_i2(q2);
    check.expect(info::edge_i2(compose_series(q1, q2)) == a * b, tag("series product", t));
    check.expect(info::edge_i2(product_parallel(q1, q2)) <= a + b, tag("parallel subadditivity", t));
  }

  for (std::uint64_t t = 0; t < kModels; ++t) {
    CounterRng rng(102, t);
    const std::size_t n = 2 + rng.below(3);
    const std::size_t m = n - 1 + rng.below(6 - n + 1);
    const SyncModel model = gen::random_model(rng, gen::random_connected_graph(rng, n, m), ChannelKind::General, 3);
    std::vector<std::size_t> observed;
    for (std::size_t e = 0; e < m; ++e) {
      if (rng.below(4) != 0) observed.push_back(e);
    }
    const std::size_t u = 0;
    const std::size_t v = 1 + rng.below(n - 1);
    const std::vector<std::size_t> single{v};

    const Rational product = info::difference_vs_observation_joint(model, u, v, observed).chi2_information();
    const Rational side = info::spin_vs_evidence_joint(model, u, single, observed).chi2_information();
    const Rational engine = info::exact_i2_conditional(model, u, v, observed);
    check.expect(product == side, tag("product spin vs side information", t));
    check.expect(side == engine, tag("side information vs engine", t));

    std::vector<std::size_t> W;
    for (std::size_t w = 1; w < n; ++w) {
      if (rng.coin()) W.push_back(w);
    }
    if (W.empty()) W.push_back(v);
    const Rational joint_side = info::spin_vs_evidence_joint(model, u, W, observed).chi2_information();
    const auto tables = info::conditional_set_tables(model, u, W, observed);
    check.expect(joint_side == info::conditional_chi2(tables), tag("side vs conditional", t));
  }
  check.note("500 channel pairs, 500 models");
}

MultiGraph sp_suite_graph(std::uint64_t t) {
  CounterRng rng(201, t);
  return gen::random_sp_graph(rng, 1 + rng.below(8));
}

bool has_asymmetric_channel(const SyncModel& m) {
  for (const Channel& c : m.channels()) {
    if (!detect_symmetry(c)) return true;
  }
  return false;
}

MultiGraph path_graph(std::size_t length) {
  std::vector<std::string> names;
  std::vector<MultiGraph::EdgeSpec> edges;
  for (std::size_t i = 0; i <= length; ++i) names.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < length; ++i) edges.push_back({"e" + std::to_string(i), names[i], names[i + 1]});
  return MultiGraph(names, edges, std::make_pair(names.front(), names.back()));
}

// 2. Exact I2 never exceeds the path sum on series-parallel models; paths attain it.
void path_sum(Check& check) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    const MultiGraph g = sp_suite_graph(t);
    CounterRng rng(202, t);
    SyncModel model = gen::random_model(rng, g, ChannelKind::General, 3);
    for (int retry = 0; retry < 50 && !has_asymmetric_channel(model); ++retry) {
      model = gen::random_model(rng, g, ChannelKind::General, 3);
    }
    check.expect(has_asymmetric_channel(model), tag("no asymmetric channel", t));

    const bounds::BoundReport r = bounds::verify_path_sum(model);
    const std::size_t u = g.terminals()->first;
    const std::size_t v = g.terminals()->second;
    Rational paths;
    for (const sp::Path& p : sp::enumerate_paths(g, u, v)) {
      Rational term(1);
      for (const std::size_t e : p) term *= info::edge_i2(model.channel(e));
      paths += term;
    }
    check.expect(r.exact_i2 && r.path_sum && *r.path_sum == paths, tag("path sum value", t));
    check.expect(r.exact_i2 && *r.exact_i2 <= paths, tag("exact above path sum", t));
    check.expect(r.path_sum_holds.value_or(false), tag("report verdict", t));
  }

  for (std::uint64_t t = 0; t < 100; ++t) {
    CounterRng rng(203, t);
    const MultiGraph g = path_graph(1 + rng.below(6));
    const SyncModel model = gen::random_model(rng, g, ChannelKind::General, 4);
    Rational product(1);
    for (const Channel& c : model.channels()) product *= info::edge_i2(c);
    const std::size_t u = 0;
    const std::size_t v = g.vertex_count() - 1;
    check.expect(info::exact_i2_conditional(model, u, v, all_edge_indices(g)) == product, tag("path equality", t));
    check.expect(bounds::path_sum_bound(model, u, v) == product, tag("path sum on a path", t));
  }
  check.note("500 series-parallel models, 100 paths");
}

struct Case {
  SyncModel model;
  std::size_t u;
  std::size_t v;
  bool tree;
};

std::vector<Case> symmetric_suite() {
  std::vector<Case> cases;
  for (std::uint64_t t = 0; t < 200; ++t) {
    CounterRng rng(301, t);
    MultiGraph g;
    if (t % 4 == 0) {
      g = gen::complete_graph_k4();
    } else {
      const std::size_t n = 3 + rng.below(2);
      g = gen::random_connected_graph(rng, n, n + rng.below(7 - n));
    }
    const std::size_t u = rng.below(g.vertex_count());
    const std::size_t v = (u + 1 + rng.below(g.vertex_count() - 1)) % g.vertex_count();
    cases.push_back({gen::random_model(rng, g, ChannelKind::Symmetric, 4), u, v, g.is_tree()});
  }
  for (std::uint64_t t = 0; t < 50; ++t) {
    CounterRng rng(302, t);
    const MultiGraph g = gen::random_tree(rng, 2 + rng.below(5));
    const std::size_t v = 1 + rng.below(g.vertex_count() - 1);
    cases.push_back({gen::random_model(rng, g, ChannelKind::Symmetric, 4), 0, v, true});
  }
  return cases;
}

// 3. Exact I2 never exceeds the I2-weighted connection probability; trees attain it.
void symmetric_percolation(Check& check) {
  std::size_t trees = 0;
  std::size_t k4 = 0;
  const std::vector<Case> cases = symmetric_suite();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    const MultiGraph& g = c.model.graph();
    const std::vector<std::size_t> target{c.v};
    const std::vector<Rational> gamma = edge_gammas(c.model);
    const Rational conn = sp::conn_exact_subsets(g, gamma, c.u, target);
    check.expect(conn == testing::brute_force_conn(g, gamma, c.u, target), tag("conn vs brute force", i));
    const bounds::PercolationBound b = bounds::symmetric_percolation_bound(c.model, c.u, target);
    check.expect(b.exact && *b.exact == conn, tag("bound value", i));
    const Rational exact = info::exact_i2_conditional(c.model, c.u, c.v, all_edge_indices(g));
    check.expect(exact <= conn, tag("exact above conn", i));
    if (c.tree) {
      check.expect(exact == conn, tag("tree equality", i));
      ++trees;
    }
    if (g.vertex_count() == 4 && g.edge_count() == 6 && !c.tree && i % 4 == 0 && i < 200) ++k4;
  }
  check.expect(k4 >= 50, "too few K4 instances");
  check.note(std::to_string(cases.size()) + " models, " + std::to_string(k4) + " on K4, " + std::to_string(trees) +
             " trees");
}

// 4. SDPI constants of symmetric edges equal their I2; I_KL stays below the SDPI percolation.
void sdpi_consistency(Check& check) {
  double worst_gap = 0;
  const std::vector<Case> cases = symmetric_suite();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    for (const Channel& q : c.model.channels()) {
      check.expect(detect_symmetry(q).has_value(), tag("channel not symmetric", i));
      const double gap = std::abs(info::sdpi_chi2(q) - info::edge_i2(q).to_double());
      worst_gap = std::max(worst_gap, gap);
      check.expect(gap <= 1e-9, tag("eta vs I2", i));
    }
    const std::vector<std::size_t> target{c.v};
    const double ikl = info::exact_ikl_conditional(c.model, c.u, c.v, all_edge_indices(c.model.graph())).to_double();
    const bounds::PercolationBound b = bounds::sdpi_percolation_bound(c.model, c.u, target);
    check.expect(ikl <= b.value + 1e-6, tag("I_KL above SDPI percolation", i));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst |eta - I2| = %.3g", worst_gap);
  check.note(std::to_string(cases.size()) + " models, " + buf);
}

// 5. BSC edge values.
void bsc_facts(Check& check) {
  for (const Rational& eps : {Rational(0), Rational(1, 10), Rational(1, 4), Rational(1, 2)}) {
    const Channel q = make_bsc(eps);
    const Rational delta = Rational(1) - Rational(2) * eps;
    const Rational want = delta * delta;
    check.expect(info::edge_i2(q) == want, "edge I2 at eps = " + eps.str());
    const info::JointTable joint = info::channel_joint(Rational(1, 2), q);
    check.expect(info::chi2_divergence(joint.joint_flat(), joint.product_flat()) == want,
                 "joint divergence at eps = " + eps.str());
    const SyncModel single = bsc_model(path_graph(1), eps);
    check.expect(info::exact_i2_conditional(single, 0, 1, std::vector<std::size_t>{0}) == want,
                 "enumeration at eps = " + eps.str());
    check.expect(std::abs(info::sdpi_chi2(q) - want.to_double()) <= 1e-9, "eta at eps = " + eps.str());
  }
  check.note("eps in {0, 1/10, 1/4, 1/2}");
}

// 6. Broadcast reduction and the subadditivity chain on every small tree.
void broadcast(Check& check) {
  std::size_t instances = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const MultiGraph& tree : testing::all_labeled_trees(n)) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<std::size_t> W;
        for (std::size_t w = 1; w < n; ++w) {
          if (mask >> (w - 1) & 1) W.push_back(w);
        }
        for (const Rational& eps : {Rational(1, 10), Rational(1, 5), Rational(2, 5)}) {
          const std::string where = "n=" + std::to_string(n) + " W mask " + std::to_string(mask) + " eps " + eps.str();
          const bounds::BotEquivalenceReport q = bounds::bot_equivalence_check(tree, 0, eps, W);
          check.expect(q.i2_equal, "I2 equality " + where);
          check.expect(q.kl_equal, "KL equality " + where);
          const bounds::EvansReport e = bounds::evans_subadditivity_check(tree, 0, eps, W);
          check.expect(e.i2_holds && e.kl_holds, "subadditivity " + where);
          check.expect(e.chain_holds, "chain " + where);
          for (const bounds::EvansStep& s : e.steps) check.expect(s.equal(), "step " + s.target + " " + where);
          ++instances;
        }
      }
    }
  }
  check.note(std::to_string(instances) + " (tree, W, eps) instances");
}

// Uniform input through Q(1|+1) = p, Q(1|-1) = q.
Rational bernoulli_pair_i2(const Rational& p, const Rational& q) {
  const Rational mid = (p + q) / Rational(2);
  const Rational half = (p - q) / Rational(2);
  return half * half * (Rational(1) / mid + Rational(1) / (Rational(1) - mid));
}

// 7. Finite-n behavior of the tied-tree bounds.
void tied_tree(Check& check) {
  const Rational a(3);
  const Rational b(1);
  const std::vector<long> ns{50, 100, 200};
  const std::vector<std::size_t> depth{1};
  const bounds::TiedTreeTable table = bounds::tied_tree_experiment(a, b, ns, depth, 2);
  check.expect(table.rows.size() == ns.size(), "row count");
  for (const bounds::TiedTreeRow& r : table.rows) {
    const double n = static_cast<double>(r.n);
    const Rational direct = bernoulli_pair_i2(a / Rational(r.n), b / Rational(r.n));
    check.expect(r.edge_i2 == direct, "edge I2 at n=" + std::to_string(r.n));
    check.expect(info::edge_i2(make_bernoulli_pair(a, b, r.n)) == direct, "channel I2 at n=" + std::to_string(r.n));
    const double leading_i2 = 4.0 / (2.0 * 4.0 * n);
    check.expect(std::abs(direct.to_double() - leading_i2) <= 5.0 / (n * n), "I2 expansion at n=" + std::to_string(r.n));
    const double leading_eta = std::pow(std::sqrt(3.0) - 1.0, 2) / n;
    check.expect(std::abs(r.edge_eta - leading_eta) <= 10.0 / (n * n), "eta expansion at n=" + std::to_string(r.n));
  }

  // Rates with (sqrt a - sqrt b)^2 > 1 > (a - b)^2 / (2 (a + b)), d = n.
  const Rational ra(3, 2);
  const Rational rb(1, 100);
  const double sa = std::sqrt(ra.to_double());
  const double sb = std::sqrt(rb.to_double());
  const Rational diff = ra - rb;
  check.expect((sa - sb) * (sa - sb) > 1.0, "SDPI rate above one");
  check.expect(diff * diff / (Rational(2) * (ra + rb)) < Rational(1), "chi-squared rate below one");
  const std::vector<long> n100{100};
  const std::vector<std::size_t> depths{1, 2, 3, 4, 5, 6};
  const bounds::TiedTreeTable regime = bounds::tied_tree_experiment_d_equals_n(ra, rb, n100, depths);
  check.expect(regime.rows.size() == depths.size(), "regime row count");
  for (std::size_t i = 0; i < regime.rows.size(); ++i) {
    const bounds::TiedTreeRow& r = regime.rows[i];
    const Rational per_level = Rational(100) * bernoulli_pair_i2(ra / Rational(100), rb / Rational(100));
    check.expect(per_level < Rational(1), "per-level ratio below one");
    Rational power(1);
    for (std::size_t k = 0; k < r.depth; ++k) power *= per_level;
    check.expect(r.chi2_path_bound == power, "path bound at depth " + std::to_string(r.depth));
    if (i > 0) {
      const bounds::TiedTreeRow& prev = regime.rows[i - 1];
      check.expect(r.chi2_path_bound < prev.chi2_path_bound, "path bound not decreasing");
      check.expect(r.chi2_path_bound / prev.chi2_path_bound == per_level, "path bound not geometric");
    }
    if (r.depth >= 3) check.expect(r.sdpi_union > 1.0, "union bound at depth " + std::to_string(r.depth));
  }
  check.note("(a,b)=(3,1) n in {50,100,200}; (3/2,1/100) d=n=100 depths 1..6");
}

// Closed forms of the non-uniform pair, written out as printed.
Rational pair_joint_closed(const Rational& d, const Rational& e) {
  const Rational one(1);
  const Rational num = d * d * (one - d) * (one - d) * (one - Rational(2) * e) * (one - Rational(2) * e) *
                       (e * e + (one - e) * (one - e)) * (e * e + (one - e) * (one - e)) *
                       (e * e + (one - e) * (one - e));
  const Rational den = Rational(-4) * d * d * e * e + Rational(4) * d * d * e - d * d + Rational(4) * d * e * e -
                       Rational(4) * d * e + d + e * e * e * e - Rational(2) * e * e * e + e * e;
  return num / (den * den);
}

Rational pair_single_closed(const Rational& d, const Rational& e) {
  const Rational one(1);
  const Rational num = d * d * (one - d) * (one - d) * (one - Rational(2) * e) * (one - Rational(2) * e);
  const Rational den = Rational(-4) * d * d * e * e + Rational(4) * d * d * e - d * d + Rational(4) * d * e * e -
                       Rational(4) * d * e + d - e * e + e;
  return num / (den * den);
}

Rational tables_i2(const SyncModel& m, const std::string& u, const std::string& v,
                   const std::vector<std::string>& edges) {
  std::vector<std::size_t> observed;
  for (const std::string& id : edges) observed.push_back(m.graph().edge_index(id));
  return info::conditional_chi2(
      info::conditional_pair_tables(m, m.graph().vertex(u), m.graph().vertex(v), observed));
}

// 8. Non-uniform pair and the Z/4Z spoon.
void counterexamples(Check& check) {
  const Rational fifth(1, 5);
  const bounds::NonuniformReport r = bounds::counterexample_nonuniform(fifth, fifth);
  const Rational joint = pair_joint_closed(fifth, fifth);
  const Rational single = pair_single_closed(fifth, fifth);
  check.expect(r.joint_formula == joint, "joint closed form");
  check.expect(r.single_formula == single, "single closed form");
  check.expect(r.joint_enumerated == joint, "joint enumeration");
  check.expect(r.single_e_enumerated == single && r.single_f_enumerated == single, "single enumeration");
  const SyncModel pair = bounds::nonuniform_pair_model(fifth, fifth);
  check.expect(tables_i2(pair, "u", "v", {"e", "f"}) == joint, "joint from definitional tables");
  check.expect(tables_i2(pair, "u", "v", {"e"}) == single, "single from definitional tables");
  check.expect(joint > single + single && r.subadditivity_violated, "subadditivity violation");
  check.expect(r.formulas_match, "report verdict");

  const bounds::GroupSpoonReport g = bounds::counterexample_group_spoon();
  check.expect(g.full == Rational(1) && g.with_f1 == Rational(1, 2) && g.with_f2 == Rational(0), "spoon values");
  const SyncModel spoon = bounds::group_spoon_model();
  check.expect(tables_i2(spoon, "u", "w", {"e", "f1", "f2"}) == Rational(1), "spoon full from tables");
  check.expect(tables_i2(spoon, "u", "w", {"e", "f1"}) == Rational(1, 2), "spoon f1 from tables");
  check.expect(tables_i2(spoon, "u", "w", {"e", "f2"}) == Rational(0), "spoon f2 from tables");
  check.expect(g.reproduced && g.subadditivity_fails, "spoon verdict");
  check.note("joint " + joint.str() + ", single " + single.str() + ", spoon (1, 1/2, 0)");
}

// 9. Interpolation of one BSC edge.
void interpolation(Check& check) {
  std::size_t nondegenerate = 0;
  std::size_t degenerate = 0;
  for (std::uint64_t t = 0; t < 1000 && nondegenerate < 60; ++t) {
    CounterRng rng(901, t);
    const std::size_t n = 3 + rng.below(2);
    const MultiGraph g = gen::random_connected_graph(rng, n, n - 1 + rng.below(3));
    const SyncModel model = gen::random_model(rng, g, ChannelKind::Bsc);
    const std::size_t v = 1 + rng.below(n - 1);
    const std::size_t f = rng.below(g.edge_count());
    const bounds::InterpolationReport r = bounds::interpolation_profile(model, 0, v, f, 11);
    check.expect(r.points.size() == 11, tag("grid size", t));
    check.expect(r.per_outcome_matches, tag("per-outcome closed form", t));
    check.expect(r.aggregate_matches, tag("aggregate identity", t));
    check.expect(r.holds(), tag("verdict", t));
    if (r.degenerate) {
      ++degenerate;
      continue;
    }
    ++nondegenerate;
    check.expect(r.points.back().h && *r.points.back().h == Rational(1), tag("h(1) = 1", t));
    for (std::size_t i = 2; i < r.points.size(); ++i) {
      check.expect(r.points[i - 1].h && r.points[i].h && *r.points[i - 1].h <= *r.points[i].h, tag("monotone h", t));
    }
  }
  check.expect(nondegenerate >= 50, "fewer than 50 non-degenerate models");

  for (std::uint64_t t = 0; t < 200; ++t) {
    CounterRng rng(902, t);
    Rational m[4];
    Rational total;
    for (Rational& x : m) {
      x = gen::random_fraction(rng, 0, 16, 16);
      total += x;
    }
    if (total == Rational(0)) continue;
    for (Rational& x : m) x /= total;
    const Rational s = gen::random_fraction(rng, 1, 9, 10);
    check.expect(bounds::outcome_h_direct(m[0], m[1], m[2], m[3], s) == bounds::outcome_h_closed(m[0], m[1], m[2], m[3], s),
                 tag("direct vs closed h", t));
  }
  check.note(std::to_string(nondegenerate) + " models with a moving profile, " + std::to_string(degenerate) +
             " degenerate, 200 posterior points");
}

bool same_edges(const MultiGraph& a, const MultiGraph& b) {
  if (a.edge_count() != b.edge_count() || a.vertex_count() != b.vertex_count()) return false;
  for (const Edge& e : a.edges()) {
    const auto other = b.find_edge(e.id);
    if (!other) return false;
    const Edge& f = b.edge(*other);
    const std::set<std::string> x{a.vertex_name(e.u), a.vertex_name(e.v)};
    const std::set<std::string> y{b.vertex_name(f.u), b.vertex_name(f.v)};
    if (x != y) return false;
  }
  return true;
}

bool same_estimate(const sp::MonteCarloEstimate& x, const sp::MonteCarloEstimate& y) {
  return x.estimate == y.estimate && x.half_width == y.half_width && x.hits == y.hits && x.trials == y.trials &&
         x.seed == y.seed && x.generator == y.generator;
}

void reliability_agrees(Check& check, const MultiGraph& g, const sp::SPTree& tree, CounterRng& rng,
                        const std::string& where) {
  std::vector<Rational> gamma;
  for (std::size_t e = 0; e < g.edge_count(); ++e) gamma.push_back(gen::random_fraction(rng, 0, 64, 64));
  const std::vector<std::size_t> target{g.terminals()->second};
  const Rational sp_value = sp::conn_sp_reliability(tree, gamma);
  check.expect(sp_value == sp::conn_exact_subsets(g, gamma, g.terminals()->first, target), "subsets " + where);
  check.expect(sp_value == testing::brute_force_conn(g, gamma, g.terminals()->first, target), "brute force " + where);
}

// 10. Decomposition, reliability, collapse and seeded Monte Carlo.
void infrastructure(Check& check) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    CounterRng rng(1001, t);
    const MultiGraph g = gen::random_sp_graph(rng, 1 + rng.below(10));
    const auto tree = sp::sp_recognize(g);
    check.expect(tree.has_value(), tag("SP graph rejected", t));
    if (!tree) continue;
    check.expect(sp::validate(*tree, g), tag("invalid tree", t));
    check.expect(same_edges(sp::recompose(*tree), g), tag("recomposed graph differs", t));
    const sp::SPTree parsed = sp::parse_sp_text(tree->text(), g, g.terminals()->first, g.terminals()->second);
    check.expect(parsed.text() == tree->text(), tag("text round trip", t));
    reliability_agrees(check, g, *tree, rng, tag("random SP", t));
  }
  for (std::uint64_t t = 0; t < 500; ++t) {
    const MultiGraph g = sp_suite_graph(t);
    const auto tree = sp::sp_recognize(g);
    check.expect(tree.has_value(), tag("suite SP graph rejected", t));
    CounterRng rng(1002, t);
    if (tree) reliability_agrees(check, g, *tree, rng, tag("SP suite", t));
  }
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t depth = 1; depth <= 3; ++depth) {
      const SyncModel tied = sp::tied_tree_build(bsc_model(regular_tree(d, depth), Rational(1, 10)), 0);
      const MultiGraph& g = tied.graph();
      const auto tree = sp::sp_recognize(g);
      check.expect(tree.has_value(), "tied tree rejected");
      if (!tree || g.edge_count() > 20) continue;
      CounterRng rng(1003, d * 10 + depth);
      reliability_agrees(check, g, *tree, rng, "tied tree");
    }
  }

  std::size_t k4 = 0;
  const MultiGraph plain = gen::complete_graph_k4();
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t v = u + 1; v < 4; ++v) {
      check.expect(!sp::sp_recognize(plain, u, v), "K4 accepted");
      ++k4;
    }
  }
  for (std::uint64_t t = 0; t < 200; ++t) {
    CounterRng rng(1004, t);
    const MultiGraph g = gen::random_k4_subdivision(rng, 4);
    check.expect(!sp::sp_recognize(g), tag("K4 subdivision accepted", t));
    ++k4;
  }

  std::size_t collapsed = 0;
  for (std::uint64_t t = 0; t < 120; ++t) {
    CounterRng rng(1005, t);
    const MultiGraph g = gen::random_sp_graph(rng, 1 + rng.below(7));
    const SyncModel model = gen::random_model(rng, g, ChannelKind::General, 3);
    const auto tree = sp::sp_recognize(g);
    if (!tree) continue;
    const Rational folded = info::edge_i2(sp::sp_collapse_to_channel(model, *tree));
    const Rational exact =
        info::exact_i2_conditional(model, g.terminals()->first, g.terminals()->second, all_edge_indices(g));
    check.expect(folded == exact, tag("collapse vs enumeration", t));
    ++collapsed;
  }
  check.expect(collapsed >= 100, "fewer than 100 collapse checks");

  for (std::uint64_t t = 0; t < 20; ++t) {
    CounterRng rng(1006, t);
    const std::size_t n = 4 + rng.below(4);
    const MultiGraph g = gen::random_connected_graph(rng, n, n + rng.below(5));
    std::vector<double> gamma;
    for (std::size_t e = 0; e < g.edge_count(); ++e) gamma.push_back(rng.uniform());
    const std::vector<std::size_t> target{n - 1};
    const auto one = sp::conn_monte_carlo(g, gamma, 0, target, 20000, 77 + t, 1);
    const auto four = sp::conn_monte_carlo(g, gamma, 0, target, 20000, 77 + t, 4);
    check.expect(same_estimate(one, four), tag("Monte Carlo jobs", t));
  }
  {
    CounterRng rng(1007, 0);
    const SyncModel k4_model = gen::random_model(rng, plain.with_terminals(0, 3), ChannelKind::Symmetric, 3);
    bounds::BoundOptions options;
    options.subset_budget = 2;
    options.monte_carlo_trials = 50000;
    options.seed = 5;
    const std::vector<std::size_t> target{3};
    options.jobs = 1;
    const bounds::BoundReport a = bounds::evaluate_bounds(k4_model, 0, target, options);
    options.jobs = 4;
    const bounds::BoundReport b = bounds::evaluate_bounds(k4_model, 0, target, options);
    const bool mc = a.symmetric_percolation && a.symmetric_percolation->estimate && a.sdpi_percolation &&
                    a.sdpi_percolation->estimate;
    check.expect(mc, "bounds did not fall back to Monte Carlo");
    if (mc && b.symmetric_percolation && b.symmetric_percolation->estimate && b.sdpi_percolation &&
        b.sdpi_percolation->estimate) {
      check.expect(same_estimate(*a.symmetric_percolation->estimate, *b.symmetric_percolation->estimate),
                   "symmetric bound estimate jobs");
      check.expect(same_estimate(*a.sdpi_percolation->estimate, *b.sdpi_percolation->estimate),
                   "SDPI bound estimate jobs");
    } else {
      check.expect(false, "bounds estimate missing with 4 jobs");
    }
  }
  for (const auto kind : {bounds::ConjectureKind::SpGeneralization, bounds::ConjectureKind::Setwise}) {
    bounds::FuzzOptions options;
    options.kind = kind;
    options.trials = 40;
    options.seed = 11;
    options.max_vertices = 4;
    options.record_all = true;
    options.jobs = 1;
    const std::string a = bounds::fuzz_report_to_json(bounds::conjecture_fuzz(options));
    options.jobs = 4;
    const std::string b = bounds::fuzz_report_to_json(bounds::conjecture_fuzz(options));
    check.expect(a == b, "fuzz report jobs " + bounds::to_string(kind));
  }
  check.note("200 round trips, " + std::to_string(k4) + " K4 instances rejected, " + std::to_string(collapsed) +
             " collapses");
}

struct Criterion {
  int id;
  const char* name;
  double target_seconds;  // 0 when no runtime target applies
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "chi-squared identities", 60, identities},
      {2, "path-sum bound on series-parallel models", 120, path_sum},
      {3, "I2 percolation bound for symmetric channels", 120, symmetric_percolation},
      {4, "SDPI constants and the KL percolation bound", 0, sdpi_consistency},
      {5, "BSC edge values", 0, bsc_facts},
      {6, "broadcast reduction and subadditivity chain", 60, broadcast},
      {7, "tied-tree finite-n trends", 0, tied_tree},
      {8, "non-uniform and Z/4Z counterexamples", 0, counterexamples},
      {9, "single-edge interpolation", 0, interpolation},
      {10, "decomposition, reliability, collapse, seeded Monte Carlo", 0, infrastructure},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.target_seconds == 0 || seconds < c.target_seconds;
    const bool pass = check.ok() && in_time;
    failed += pass ? 0 : 1;
    std::string timing = std::to_string(seconds).substr(0, std::to_string(seconds).find('.') + 3) + " s";
    if (c.target_seconds != 0) {
      timing += " of " + std::to_string(static_cast<int>(c.target_seconds)) + " s";
      if (!in_time) timing += ", over the runtime target";
    }
    std::printf("criterion %d %s  %s: %s (%s)\n", c.id, pass ? "PASS" : "FAIL", c.name, check.summary().c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
