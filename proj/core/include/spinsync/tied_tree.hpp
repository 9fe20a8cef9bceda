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
#include <span>
#include <vector>

#include "spinsync/channel.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::sp {

/// Leaves of a tree rooted at `root` (degree-1 vertices other than the root).
std::vector<std::size_t> tree_leaves(const MultiGraph& tree, std::size_t root);

/// Restriction of a tree model to the union of root-to-W paths. Vertex and
/// edge names are kept; `root` and `targets` are renumbered through the returned map.
struct PrunedTree {
  SyncModel model;
  std::vector<std::size_t> vertex_map;  // old index -> new index, SIZE_MAX when pruned
};
PrunedTree prune_to_paths(const SyncModel& tree_model, std::size_t root, std::span<const std::size_t> targets);

/// Tied tree: a fresh vertex joined to every leaf by `leaf_channel`
/// (noiseless by default). Terminals are (root, new vertex).
SyncModel tied_tree_build(const SyncModel& tree_model, std::size_t root,
                          const std::optional<Channel>& leaf_channel = std::nullopt);

}  // namespace spinsync::sp
