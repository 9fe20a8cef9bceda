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
#include <string>
#include <string_view>
#include <vector>

#include "spinsync/channel.hpp"
#include "spinsync/group.hpp"
#include "spinsync/multigraph.hpp"
#include "spinsync/rational.hpp"

namespace spinsync {

/// Spin synchronization model: spins on the vertices of a multigraph, one
/// noisy observation per edge of the spin difference across it.
///
/// Spins are i.i.d. uniform on the group unless a binary prior is given, in
/// which case P[X_v = +1] = prior_plus[v] (independent across vertices).
class SyncModel {
 public:
  SyncModel(MultiGraph graph, std::vector<Channel> channels, GroupSpec group = GroupSpec::binary(),
            std::optional<std::vector<Rational>> prior_plus = std::nullopt);

  const MultiGraph& graph() const { return graph_; }
  const GroupSpec& group() const { return group_; }
  const Channel& channel(std::size_t e) const { return channels_[e]; }
  const std::vector<Channel>& channels() const { return channels_; }

  bool has_uniform_prior() const { return !prior_plus_.has_value(); }
  bool is_uniform_binary() const { return group_.is_binary() && has_uniform_prior(); }
  /// P[X_v = +1]; 1/2 under the uniform prior. Binary models only.
  Rational prior_plus(std::size_t v) const;
  const std::optional<std::vector<Rational>>& prior() const { return prior_plus_; }

  /// Throws NotApplicable naming `what` unless spins are uniform binary.
  void require_uniform_binary(std::string_view what) const;

  SyncModel with_channel(std::size_t e, Channel channel) const;
  SyncModel with_terminals(std::size_t u, std::size_t v) const;

  friend bool operator==(const SyncModel&, const SyncModel&) = default;

 private:
  MultiGraph graph_;
  std::vector<Channel> channels_;
  GroupSpec group_;
  std::optional<std::vector<Rational>> prior_plus_;
};

/// Model extended by a fresh vertex joined to every w in `targets` through a
/// noiseless edge. For |targets| = 1 the original model is returned unchanged
/// with `target` set to that vertex.
struct TiedModel {
  SyncModel model;
  std::size_t target;
};
TiedModel tie_vertex_set(const SyncModel& model, std::span<const std::size_t> targets,
                         const std::string& stem = "tie");

/// Every edge index of the model, in order.
std::vector<std::size_t> all_edges(const SyncModel& model);

/// Model on `tree` with BSC(epsilon) on every edge and uniform binary spins.
SyncModel bsc_model(const MultiGraph& graph, const Rational& epsilon);
/// Two vertices "u", "v", one edge "e" with make_bernoulli_pair(a, b, n).
SyncModel bernoulli_pair_model(const Rational& a, const Rational& b, long n);

/// Complete d-ary tree of the given depth. The root is named "r", children
/// append ".i" to their parent's name; the edge into vertex x is "e:x".
MultiGraph regular_tree(std::size_t branching, std::size_t depth);

}  // namespace spinsync
