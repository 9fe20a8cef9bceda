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

#include "spinsync/multigraph.hpp"

#include <numeric>

#include "spinsync/errors.hpp"

namespace spinsync {

MultiGraph::MultiGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                       std::optional<std::pair<std::string, std::string>> terminals) {
  for (auto& name : vertices) {
    add_vertex(std::move(name));
  }
  for (const auto& spec : edges) {
    add_edge(spec.id, vertex(spec.from), vertex(spec.to));
  }
  if (terminals) {
    *this = with_terminals(vertex(terminals->first), vertex(terminals->second));
  }
}

std::optional<std::size_t> MultiGraph::find_vertex(const std::string& name) const {
  const auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t MultiGraph::vertex(const std::string& name) const {
  const auto v = find_vertex(name);
  if (!v) {
    throw InvalidInput("unknown vertex \"" + name + "\"");
  }
  return *v;
}

std::optional<std::size_t> MultiGraph::find_edge(const std::string& id) const {
  const auto it = edge_index_.find(id);
  if (it == edge_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t MultiGraph::edge_index(const std::string& id) const {
  const auto e = find_edge(id);
  if (!e) {
    throw InvalidInput("unknown edge \"" + id + "\"");
  }
  return *e;
}

MultiGraph MultiGraph::with_terminals(std::size_t u, std::size_t v) const {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw InvalidInput("terminal is not a vertex of the graph");
  }
  if (u == v) {
    throw InvalidInput("terminals must be distinct vertices");
  }
  MultiGraph copy = *this;
  copy.terminals_ = std::make_pair(u, v);
  return copy;
}

bool MultiGraph::is_connected() const {
  if (vertices_.empty()) {
    return true;
  }
  DisjointSets sets(vertex_count());
  std::size_t components = vertex_count();
  for (const auto& e : edges_) {
    if (sets.unite(e.u, e.v)) {
      --components;
    }
  }
  return components == 1;
}

bool MultiGraph::is_tree() const {
  return !vertices_.empty() && edges_.size() + 1 == vertices_.size() && is_connected();
}

std::size_t MultiGraph::add_vertex(std::string name) {
  if (name.empty()) {
    throw InvalidInput("empty vertex name");
  }
  if (!vertex_index_.try_emplace(name, vertices_.size()).second) {
    throw InvalidInput("duplicate vertex \"" + name + "\"");
  }
  vertices_.push_back(std::move(name));
  incidence_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t MultiGraph::add_edge(std::string id, std::size_t u, std::size_t v) {
  if (id.empty()) {
    throw InvalidInput("empty edge id");
  }
  if (u >= vertex_count() || v >= vertex_count()) {
    throw InvalidInput("edge \"" + id + "\" has an endpoint outside the graph");
  }
  if (u == v) {
    throw InvalidInput("self-loop on edge \"" + id + "\"");
  }
  if (!edge_index_.try_emplace(id, edges_.size()).second) {
    throw InvalidInput("duplicate edge id \"" + id + "\"");
  }
  edges_.push_back(Edge{std::move(id), u, v});
  incidence_[u].push_back(edges_.size() - 1);
  incidence_[v].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

std::string MultiGraph::fresh_vertex_name(const std::string& stem) const {
  if (!vertex_index_.contains(stem)) {
    return stem;
  }
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!vertex_index_.contains(candidate)) {
      return candidate;
    }
  }
}

std::string MultiGraph::fresh_edge_id(const std::string& stem) const {
  if (!edge_index_.contains(stem)) {
    return stem;
  }
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!edge_index_.contains(candidate)) {
      return candidate;
    }
  }
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) {
    return false;
  }
  parent_[b] = a;
  return true;
}

}  // namespace spinsync
