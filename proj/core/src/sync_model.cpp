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

#include "spinsync/sync_model.hpp"

#include <numeric>

#include "spinsync/errors.hpp"

namespace spinsync {

SyncModel::SyncModel(MultiGraph graph, std::vector<Channel> channels, GroupSpec group,
                     std::optional<std::vector<Rational>> prior_plus)
    : graph_(std::move(graph)), channels_(std::move(channels)), group_(group), prior_plus_(std::move(prior_plus)) {
  if (channels_.size() != graph_.edge_count()) {
    throw InvalidInput("every edge needs exactly one channel");
  }
  for (std::size_t e = 0; e < channels_.size(); ++e) {
    if (channels_[e].input_size() != group_.order()) {
      throw InvalidInput("channel on edge \"" + graph_.edge(e).id + "\" has " +
                         std::to_string(channels_[e].input_size()) + " input rows, group " + group_.name() +
                         " needs " + std::to_string(group_.order()));
    }
  }
  if (prior_plus_) {
    if (!group_.is_binary()) {
      throw InvalidInput("non-uniform priors are only supported for binary spins");
    }
    if (prior_plus_->size() != graph_.vertex_count()) {
      throw InvalidInput("prior must list one probability per vertex");
    }
    bool uniform = true;
    for (const auto& p : *prior_plus_) {
      if (!p.is_probability()) {
        throw InvalidInput("prior probability " + p.str() + " outside [0,1]");
      }
      uniform = uniform && p == Rational(1, 2);
    }
    if (uniform) {
      prior_plus_.reset();
    }
  }
}

Rational SyncModel::prior_plus(std::size_t v) const {
  if (!group_.is_binary()) {
    throw NotApplicable("prior_plus is defined for binary spins only");
  }
  return prior_plus_ ? (*prior_plus_)[v] : Rational(1, 2);
}

void SyncModel::require_uniform_binary(std::string_view what) const {
  if (!group_.is_binary()) {
    throw NotApplicable(std::string(what) + " requires binary spins (model group is " + group_.name() + ")");
  }
  if (!has_uniform_prior()) {
    throw NotApplicable(std::string(what) + " requires uniform spins");
  }
}

SyncModel SyncModel::with_channel(std::size_t e, Channel channel) const {
  SyncModel copy = *this;
  if (channel.input_size() != group_.order()) {
    throw InvalidInput("replacement channel does not match the model group");
  }
  copy.channels_.at(e) = std::move(channel);
  return copy;
}

SyncModel SyncModel::with_terminals(std::size_t u, std::size_t v) const {
  SyncModel copy = *this;
  copy.graph_ = graph_.with_terminals(u, v);
  return copy;
}

TiedModel tie_vertex_set(const SyncModel& model, std::span<const std::size_t> targets, const std::string& stem) {
  if (targets.empty()) {
    throw InvalidInput("vertex set W is empty");
  }
  if (targets.size() == 1) {
    return TiedModel{model, targets.front()};
  }
  MultiGraph graph = model.graph();
  std::vector<Channel> channels = model.channels();
  const std::size_t tie = graph.add_vertex(graph.fresh_vertex_name(stem));
  for (const std::size_t w : targets) {
    graph.add_edge(graph.fresh_edge_id(stem + ":" + graph.vertex_name(w)), w, tie);
    channels.push_back(make_noiseless(model.group()));
  }
  std::optional<std::vector<Rational>> prior = model.prior();
  if (prior) {
    prior->push_back(Rational(1, 2));
  }
  return TiedModel{SyncModel(std::move(graph), std::move(channels), model.group(), std::move(prior)), tie};
}

std::vector<std::size_t> all_edges(const SyncModel& model) {
  std::vector<std::size_t> edges(model.graph().edge_count());
  std::iota(edges.begin(), edges.end(), 0);
  return edges;
}

SyncModel bsc_model(const MultiGraph& graph, const Rational& epsilon) {
  return SyncModel(graph, std::vector<Channel>(graph.edge_count(), make_bsc(epsilon)));
}

SyncModel bernoulli_pair_model(const Rational& a, const Rational& b, long n) {
  MultiGraph graph({"u", "v"}, {{"e", "u", "v"}}, std::make_pair(std::string("u"), std::string("v")));
  return SyncModel(std::move(graph), {make_bernoulli_pair(a, b, n)});
}

MultiGraph regular_tree(std::size_t branching, std::size_t depth) {
  if (branching == 0) {
    throw InvalidInput("branching factor must be positive");
  }
  MultiGraph tree;
  tree.add_vertex("r");
  std::vector<std::size_t> frontier{0};
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<std::size_t> next;
    for (const std::size_t parent : frontier) {
      for (std::size_t i = 0; i < branching; ++i) {
        const std::string name = tree.vertex_name(parent) + "." + std::to_string(i);
        const std::size_t child = tree.add_vertex(name);
        tree.add_edge("e:" + name, parent, child);
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

}  // namespace spinsync
