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

#include <cstdint>

#include "spinsync/channel.hpp"
#include "spinsync/sp_tree.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::sp {

inline constexpr std::uint64_t kDefaultCollapseBudget = std::uint64_t{1} << 22;

/// Folds the model's channels along the decomposition: series nodes compose,
/// parallel nodes take products, and outputs are merged at every node. The
/// result is the law of all observations given X_source * X_sink.
/// Requires uniform binary spins. Throws BudgetExceeded before forming a
/// series or parallel product with more than `output_budget` outputs.
Channel sp_collapse_to_channel(const SyncModel& model, const SPTree& tree,
                               std::uint64_t output_budget = kDefaultCollapseBudget);

}  // namespace spinsync::sp
