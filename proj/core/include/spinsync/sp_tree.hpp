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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinsync/multigraph.hpp"

namespace spinsync::sp {

enum class NodeKind { Leaf, Series, Parallel };

struct SPNode {
  NodeKind kind = NodeKind::Leaf;
  std::size_t edge = 0;    // Leaf: edge index in the source graph
  std::size_t left = 0;    // Series/Parallel: child node indices
  std::size_t right = 0;
  std::size_t middle = 0;  // Series: vertex shared by left.sink and right.source
  std::size_t source = 0;
  std::size_t sink = 0;
};

/// Series/parallel decomposition of a two-terminal multigraph. Nodes are
/// stored children-first, so a forward pass visits every child before its parent.
class SPTree {
 public:
  SPTree(std::vector<SPNode> nodes, std::vector<std::string> vertex_names, std::vector<std::string> edge_ids);

  const SPNode& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<SPNode>& nodes() const { return nodes_; }
  std::size_t root() const { return nodes_.size() - 1; }
  std::size_t source() const { return nodes_.back().source; }
  std::size_t sink() const { return nodes_.back().sink; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }

  /// Leaf edge indices in left-to-right order.
  std::vector<std::size_t> leaf_edges() const;

  /// Parenthesized form, e.g. `P(e3,S(e1,e2@w))`.
  std::string text() const;

  /// Bottom-up evaluation: leaf(edge, source, sink), series(l, r), parallel(l, r).
  template <class T, class Leaf, class Series, class Parallel>
  T fold(Leaf&& leaf, Series&& series, Parallel&& parallel) const {
    std::vector<std::optional<T>> value(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const SPNode& n = nodes_[i];
      switch (n.kind) {
        case NodeKind::Leaf:
          value[i].emplace(leaf(n.edge, n.source, n.sink));
          break;
        case NodeKind::Series:
          value[i].emplace(series(*value[n.left], *value[n.right]));
          break;
        case NodeKind::Parallel:
          value[i].emplace(parallel(*value[n.left], *value[n.right]));
          break;
      }
      if (n.kind != NodeKind::Leaf) {
        value[n.left].reset();
        value[n.right].reset();
      }
    }
    return std::move(*value.back());
  }

 private:
  std::vector<SPNode> nodes_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_ids_;
};

/// Decomposes `g` with terminals (u, v) by exhausting parallel merges before
/// each series contraction of the lowest-index non-terminal degree-2 vertex.
/// Returns nullopt when the graph is not two-terminal series-parallel.
/// Throws InvalidInput for a disconnected graph or u == v.
std::optional<SPTree> sp_recognize(const MultiGraph& g, std::size_t u, std::size_t v);

/// Uses the graph's terminals; throws InvalidInput when it has none.
std::optional<SPTree> sp_recognize(const MultiGraph& g);

/// Parses the text form against `g`, orienting it from u to v. Throws
/// InvalidInput on syntax errors or when the tree does not match `g`.
SPTree parse_sp_text(std::string_view text, const MultiGraph& g, std::size_t u, std::size_t v);

/// Graph assembled from the tree's leaves, with vertex and edge names of the source.
MultiGraph recompose(const SPTree& tree);

/// True when every structural invariant holds and the leaves cover E(g) exactly once.
bool validate(const SPTree& tree, const MultiGraph& g);

}  // namespace spinsync::sp
