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

#include "spinsync/sp_collapse.hpp"

#include <string>

#include "spinsync/errors.hpp"

namespace spinsync::sp {

namespace {

void check_product(const Channel& l, const Channel& r, std::uint64_t budget) {
  const auto outputs = static_cast<unsigned __int128>(l.output_size()) * r.output_size();
  if (outputs > budget) {
    throw BudgetExceeded("collapsed channel needs " + std::to_string(static_cast<std::uint64_t>(outputs)) +
                         " intermediate outputs, budget is " + std::to_string(budget));
  }
}

}  // namespace

Channel sp_collapse_to_channel(const SyncModel& model, const SPTree& tree, std::uint64_t output_budget) {
  model.require_uniform_binary("series-parallel collapse");
  if (!validate(tree, model.graph())) {
    throw InvalidInput("decomposition tree does not match the model graph");
  }
  return tree.fold<Channel>(
      [&](std::size_t e, std::size_t source, std::size_t) {
        const Channel merged = merge_equivalent_outputs(model.channel(e));
        return model.graph().edge(e).u == source ? merged : reversed_input(merged);
      },
      [&](const Channel& l, const Channel& r) {
        check_product(l, r, output_budget);
        return merge_equivalent_outputs(compose_series(l, r));
      },
      [&](const Channel& l, const Channel& r) {
        check_product(l, r, output_budget);
        return merge_equivalent_outputs(product_parallel(l, r));
      });
}

}  // namespace spinsync::sp
