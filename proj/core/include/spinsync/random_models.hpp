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

#include "spinsync/channel.hpp"
#include "spinsync/multigraph.hpp"
#include "spinsync/random.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::gen {

/// Entries drawn as integers in [0, 64] and each row normalized.
Channel random_channel(CounterRng& rng, std::size_t max_alphabet = 4, const GroupSpec& group = GroupSpec::binary());

/// Binary channel admitting an output involution T with Q(T y | +1) = Q(y | -1).
Channel random_symmetric_channel(CounterRng& rng, std::size_t max_alphabet = 4);

/// BSC with crossover j/64, j uniform in [0, 32].
Channel random_bsc(CounterRng& rng);

/// Random rational in [lo/den, hi/den].
Rational random_fraction(CounterRng& rng, long lo, long hi, long den);

/// Two-terminal series-parallel graph grown from a single u-v edge by
/// random series subdivisions and parallel duplications. Terminals ("u", "v").
MultiGraph random_sp_graph(CounterRng& rng, std::size_t edges);

/// Connected multigraph on `vertices` vertices with `edges` >= vertices - 1 edges.
MultiGraph random_connected_graph(CounterRng& rng, std::size_t vertices, std::size_t edges);

/// Random tree on `vertices` vertices named "t0".."t{n-1}", rooted at "t0".
MultiGraph random_tree(CounterRng& rng, std::size_t vertices);

MultiGraph complete_graph_k4();

/// K4 with each edge subdivided a random number of times (up to `max_extra`
/// extra vertices in total), random parallel copies, and a random terminal pair.
MultiGraph random_k4_subdivision(CounterRng& rng, std::size_t max_extra);

enum class ChannelKind { General, Symmetric, Bsc };

SyncModel random_model(CounterRng& rng, const MultiGraph& graph, ChannelKind kind, std::size_t max_alphabet = 4);

}  // namespace spinsync::gen
