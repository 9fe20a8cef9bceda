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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinsync {

struct Edge {
  std::string id;
  std::size_t u = 0;
  std::size_t v = 0;

  std::size_t other(std::size_t w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with named vertices and edges. Parallel edges are
/// allowed, self-loops are not. Vertices and edges are addressed by index;
/// indices follow declaration order.
class MultiGraph {
 public:
  struct EdgeSpec {
    std::string id;
    std::string from;
    std::string to;
  };

  MultiGraph() = default;
  MultiGraph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
             std::optional<std::pair<std::string, std::string>> terminals = std::nullopt);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(std::size_t v) const { return vertices_[v]; }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::size_t vertex(const std::string& name) const;  // throws InvalidInput

  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> find_edge(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;  // throws InvalidInput

  /// Incident edge indices of v in increasing order.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incidence_[v]; }

  const std::optional<std::pair<std::size_t, std::size_t>>& terminals() const { return terminals_; }
  MultiGraph with_terminals(std::size_t u, std::size_t v) const;

  bool is_connected() const;
  bool is_tree() const;

  /// Adds a vertex (returns its index); used by builders.
  std::size_t add_vertex(std::string name);
  std::size_t add_edge(std::string id, std::size_t u, std::size_t v);

  /// A vertex name not yet used, derived from `stem`.
  std::string fresh_vertex_name(const std::string& stem) const;
  std::string fresh_edge_id(const std::string& stem) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.terminals_ == b.terminals_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> edge_index_;
  std::optional<std::pair<std::size_t, std::size_t>> terminals_;
};

/// Small union-find used by connectivity checks.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace spinsync
