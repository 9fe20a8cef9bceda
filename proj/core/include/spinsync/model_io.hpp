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

#include <filesystem>
#include <string>
#include <string_view>

#include "spinsync/channel.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync {

// Model files are UTF-8 JSON:
//
//   {
//     "group": "Z2",                      optional, default "Z2"
//     "vertices": ["u", "w", "v"],
//     "terminals": ["u", "v"],            optional
//     "prior": "uniform" | {"u": "1/5"},  optional, P[X_v = +1]; binary only
//     "edges": [
//       {"id": "e1", "from": "u", "to": "w",
//        "channel": {"alphabet": ["+1", "-1"],
//                    "rows": {"+1": ["3/4", "1/4"], "-1": ["1/4", "3/4"]}}}
//     ]
//   }
//
// Probabilities are exact rational strings. Z_k models label rows "0".."k-1".

SyncModel parse_model(std::string_view json_text);
SyncModel load_model(const std::filesystem::path& path);

std::string model_to_json(const SyncModel& model, int indent = 2);
void save_model(const SyncModel& model, const std::filesystem::path& path);

/// Channel object as it appears under "channel" in a model file.
std::string channel_to_json(const Channel& channel, const GroupSpec& group);

}  // namespace spinsync
