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

#include "spinsync/bot.hpp"

#include <algorithm>

#include "spinsync/bounds.hpp"
#include "spinsync/errors.hpp"

namespace spinsync::bounds {

namespace {

// Edge indices on the tree path from the root to each vertex.
std::vector<std::vector<std::size_t>> root_paths(const MultiGraph& tree, std::size_t root) {
  std::vector<std::vector<std::size_t>> path(tree.vertex_count());
  std::vector<bool> seen(tree.vertex_count(), false);
  std::vector<std::size_t> queue{root};
  seen[root] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t at = queue[i];
    for (const std::size_t e : tree.incident(at)) {
      const std::size_t next = tree.edge(e).other(at);
      if (seen[next]) continue;
      seen[next] = true;
      path[next] = path[at];
      path[next].push_back(e);
      queue.push_back(next);
    }
  }
  return path;
}

void check_instance(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                    std::span<const std::size_t> targets) {
  if (!tree.is_tree()) throw InvalidInput("broadcast needs a tree");
  if (root >= tree.vertex_count()) throw InvalidInput("root index out of range");
  if (!epsilon.is_probability()) throw InvalidInput("flip probability must lie in [0, 1]");
  if (targets.empty()) throw InvalidInput("vertex set W is empty");
  for (const std::size_t w : targets) {
    if (w >= tree.vertex_count() || w == root) throw InvalidInput("W must be tree vertices other than the root");
  }
}

info::JointTable broadcast_law(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                               std::span<const std::size_t> targets, std::uint64_t budget) {
  const std::size_t m = tree.edge_count();
  if (m + 1 >= 63 || (std::uint64_t{2} << m) > budget) {
    throw BudgetExceeded("broadcast law needs 2^" + std::to_string(m + 1) + " flip patterns, budget is " +
                         std::to_string(budget));
  }
  const auto paths = root_paths(tree, root);
  const std::size_t cols = std::size_t{1} << targets.size();
  std::vector<std::vector<Rational>> mass(2, std::vector<Rational>(cols));
  const Rational keep = Rational(1) - epsilon;
  for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << m); ++flips) {
    Rational weight(1, 2);
    for (std::size_t e = 0; e < m && !weight.is_zero(); ++e) weight *= (flips >> e & 1) ? epsilon : keep;
    if (weight.is_zero()) continue;
    for (std::size_t root_spin = 0; root_spin < 2; ++root_spin) {
      std::size_t col = 0;
      for (std::size_t i = 0; i < targets.size(); ++i) {
        std::size_t spin = root_spin;
        for (const std::size_t e : paths[targets[i]]) spin ^= flips >> e & 1;
        col = col << 1 | spin;
      }
      mass[root_spin][col] += weight;
    }
  }
  std::vector<std::string> labels;
  for (std::size_t col = 0; col < cols; ++col) {
    std::string label;
    for (std::size_t i = targets.size(); i-- > 0;) label += (col >> i & 1) ? '-' : '+';
    labels.push_back(label);
  }
  return info::JointTable({"+1", "-1"}, std::move(labels), std::move(mass));
}

// Tree model with a fresh vertex joined to every w in W by a noiseless edge,
// also when |W| = 1. Tie edges follow the tree edges in index order.
TiedModel tie_targets(const SyncModel& model, std::span<const std::size_t> targets) {
  MultiGraph graph = model.graph();
  std::vector<Channel> channels = model.channels();
  const std::size_t tie = graph.add_vertex(graph.fresh_vertex_name("v"));
  for (const std::size_t w : targets) {
    graph.add_edge(graph.fresh_edge_id("tie:" + graph.vertex_name(w)), w, tie);
    channels.push_back(make_noiseless());
  }
  return TiedModel{SyncModel(std::move(graph), std::move(channels)), tie};
}

}  // namespace

BotInstance bot_build(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                      std::span<const std::size_t> targets, std::uint64_t budget) {
  check_instance(tree, root, epsilon, targets);
  return BotInstance{broadcast_law(tree, root, epsilon, targets, budget), bsc_model(tree, epsilon), root,
                     std::vector<std::size_t>(targets.begin(), targets.end())};
}

BotEquivalenceReport bot_equivalence_check(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                                           std::span<const std::size_t> targets, std::uint64_t budget) {
  const BotInstance bot = bot_build(tree, root, epsilon, targets, budget);
  BotEquivalenceReport r;
  r.bot_i2 = bot.law.chi2_information();
  r.bot_kl = bot.law.kl_information();
  const info::JointTable sot = info::spin_vs_evidence_joint(bot.model, root, targets, all_edges(bot.model), budget);
  r.sot_i2 = sot.chi2_information();
  r.sot_kl = sot.kl_information();
  const TiedModel tied = tie_targets(bot.model, targets);
  const info::ConditionalInfo exact = info::exact_conditional_info(tied.model, root, tied.target, all_edges(tied.model));
  r.tied_i2 = exact.chi2;
  r.tied_kl = exact.kl;
  r.i2_equal = r.bot_i2 == r.sot_i2 && r.sot_i2 == r.tied_i2;
  auto close = [](KlBits a, KlBits b) { return std::abs((a - b).to_double()) <= 1e-9; };
  r.kl_equal = close(r.bot_kl, r.sot_kl) && close(r.sot_kl, r.tied_kl);
  return r;
}

EvansReport evans_subadditivity_check(const MultiGraph& tree, std::size_t root, const Rational& epsilon,
                                      std::span<const std::size_t> targets, std::uint64_t budget) {
  const BotInstance bot = bot_build(tree, root, epsilon, targets, budget);
  const SyncModel& model = bot.model;
  const TiedModel tied = tie_targets(model, targets);
  const auto paths = root_paths(tree, root);
  const Rational delta_sq = pow(Rational(1) - 2 * epsilon, 2);

  EvansReport r;
  r.joint_i2 = bot.law.chi2_information();
  r.joint_kl = bot.law.kl_information();
  r.tied_i2 = info::exact_i2_conditional(tied.model, root, tied.target, all_edges(tied.model));
  r.path_sum = path_sum_bound(tied.model, root, tied.target);

  bool steps_equal = true;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::size_t w = targets[i];
    const std::vector<std::size_t>& path = paths[w];
    std::vector<std::size_t> with_tie = path;
    with_tie.push_back(tree.edge_count() + i);
    const std::size_t single[] = {w};
    const info::JointTable law = broadcast_law(tree, root, epsilon, single, budget);

    EvansStep s;
    s.target = tree.vertex_name(w);
    s.path_length = path.size();
    s.path_term = info::exact_i2_conditional(tied.model, root, tied.target, with_tie);
    s.noiseless_swap = info::exact_i2_conditional(tied.model, root, w, with_tie);
    s.tie_dropped = info::exact_i2_conditional(model, root, w, path);
    s.tree_completed = info::exact_i2_conditional(model, root, w, all_edges(model));
    s.bot_single = law.chi2_information();
    s.bot_single_kl = law.kl_information();
    s.path_product = pow(delta_sq, static_cast<unsigned>(path.size()));
    steps_equal = steps_equal && s.equal();
    r.sum_i2 += s.bot_single;
    r.sum_kl += s.bot_single_kl;
    r.steps.push_back(std::move(s));
  }
  r.i2_holds = r.joint_i2 <= r.sum_i2;
  r.kl_holds = r.joint_kl.to_double() <= r.sum_kl.to_double() + 1e-9;
  r.chain_holds = steps_equal && r.tied_i2 == r.joint_i2 && r.path_sum == r.sum_i2;
  return r;
}

}  // namespace spinsync::bounds
