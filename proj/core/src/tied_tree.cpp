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

#include "spinsync/tied_tree.hpp"

#include "spinsync/errors.hpp"

namespace spinsync::sp {

namespace {

void require_tree(const MultiGraph& g, std::size_t root) {
  if (!g.is_tree()) {
    throw InvalidInput("tied-tree construction needs a tree");
  }
  if (root >= g.vertex_count()) {
    throw InvalidInput("tree root out of range");
  }
}

}  // namespace

std::vector<std::size_t> tree_leaves(const MultiGraph& tree, std::size_t root) {
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (v != root && tree.incident(v).size() == 1) leaves.push_back(v);
  }
  return leaves;
}

PrunedTree prune_to_paths(const SyncModel& tree_model, std::size_t root, std::span<const std::size_t> targets) {
  const MultiGraph& g = tree_model.graph();
  require_tree(g, root);
  std::vector<std::size_t> parent(g.vertex_count(), SIZE_MAX);
  std::vector<std::size_t> parent_edge(g.vertex_count(), SIZE_MAX);
  std::vector<std::size_t> order{root};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const std::size_t e : g.incident(order[i])) {
      const std::size_t next = g.edge(e).other(order[i]);
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = order[i];
      parent_edge[next] = e;
      order.push_back(next);
    }
  }
  std::vector<bool> keep(g.vertex_count(), false);
  keep[root] = true;
  for (std::size_t w : targets) {
    if (w >= g.vertex_count()) throw InvalidInput("target vertex out of range");
    while (!keep[w]) {
      keep[w] = true;
      w = parent[w];
    }
  }
  PrunedTree out{SyncModel(MultiGraph(), {}), std::vector<std::size_t>(g.vertex_count(), SIZE_MAX)};
  MultiGraph pruned;
  std::vector<Channel> channels;
  std::optional<std::vector<Rational>> prior;
  if (tree_model.prior()) prior.emplace();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) continue;
    out.vertex_map[v] = pruned.add_vertex(g.vertex_name(v));
    if (prior) prior->push_back(tree_model.prior_plus(v));
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (keep[edge.u] && keep[edge.v]) {
      pruned.add_edge(edge.id, out.vertex_map[edge.u], out.vertex_map[edge.v]);
      channels.push_back(tree_model.channel(e));
    }
  }
  out.model = SyncModel(std::move(pruned), std::move(channels), tree_model.group(), std::move(prior));
  return out;
}

SyncModel tied_tree_build(const SyncModel& tree_model, std::size_t root, const std::optional<Channel>& leaf_channel) {
  const MultiGraph& tree = tree_model.graph();
  require_tree(tree, root);
  const std::vector<std::size_t> leaves = tree_leaves(tree, root);
  if (leaves.empty()) {
    throw InvalidInput("tree has no leaves to tie");
  }
  MultiGraph graph = tree;
  std::vector<Channel> channels = tree_model.channels();
  const std::size_t tie = graph.add_vertex(graph.fresh_vertex_name("v"));
  const Channel link = leaf_channel.value_or(make_noiseless(tree_model.group()));
  for (const std::size_t w : leaves) {
    graph.add_edge(graph.fresh_edge_id("tie:" + graph.vertex_name(w)), w, tie);
    channels.push_back(link);
  }
  std::optional<std::vector<Rational>> prior = tree_model.prior();
  if (prior) prior->push_back(Rational(1, 2));
  return SyncModel(graph.with_terminals(root, tie), std::move(channels), tree_model.group(), std::move(prior));
}

}  // namespace spinsync::sp
