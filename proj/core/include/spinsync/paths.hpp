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
#include <functional>
#include <span>
#include <vector>

#include "spinsync/multigraph.hpp"

namespace spinsync::sp {

inline constexpr std::uint64_t kDefaultPathBudget = 1'000'000;

using Path = std::vector<std::size_t>;  // edge indices from u to v

/// Visits every self-avoiding walk from u to v, depth first, trying incident
/// edges in index order. Throws BudgetExceeded past `budget` paths.
void for_each_path(const MultiGraph& g, std::size_t u, std::size_t v, std::uint64_t budget,
                   const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<Path> enumerate_paths(const MultiGraph& g, std::size_t u, std::size_t v,
                                  std::uint64_t budget = kDefaultPathBudget);

std::uint64_t count_paths(const MultiGraph& g, std::size_t u, std::size_t v,
                          std::uint64_t budget = kDefaultPathBudget);

}  // namespace spinsync::sp
