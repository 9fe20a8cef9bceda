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

#include "spinsync/channel.hpp"

namespace spinsync::info {

/// Chi-squared contraction coefficient of a binary-input channel, taken as
/// the supremum over input priors of the chi-squared information ratio.
struct SdpiResult {
  double eta = 0;          // best of all candidates below
  double argmax = 0.5;     // prior P[+1] attaining eta (0 or 1 for a boundary limit)
  double golden = 0;       // golden-section value on [1/256, 255/256]
  double golden_at = 0.5;
  double grid = 0;         // dense-grid value
  double grid_at = 0.5;
  double boundary = 0;     // larger of the limits at prior 0 and prior 1
};

SdpiResult sdpi_chi2_report(const Channel& channel, int grid_points = 10000);

inline double sdpi_chi2(const Channel& channel) { return sdpi_chi2_report(channel).eta; }

}  // namespace spinsync::info
