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

#include "spinsync/sdpi.hpp"

#include <cmath>

#include "spinsync/errors.hpp"
#include "spinsync/mutual_info.hpp"

namespace spinsync::info {

namespace {

struct Candidate {
  double value;
  double at;
};

Candidate golden_section(const Channel& channel) {
  const double ratio = (std::sqrt(5.0) - 1) / 2;
  double lo = 1.0 / 256;
  double hi = 255.0 / 256;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = chi2_mi_binary(x1, channel);
  double f2 = chi2_mi_binary(x2, channel);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = chi2_mi_binary(x2, channel);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = chi2_mi_binary(x1, channel);
    }
  }
  const double mid = (lo + hi) / 2;
  return {chi2_mi_binary(mid, channel), mid};
}

}  // namespace

SdpiResult sdpi_chi2_report(const Channel& channel, int grid_points) {
  if (!channel.is_binary()) {
    throw InvalidInput("SDPI constant needs a binary-input channel");
  }
  SdpiResult r;
  const Candidate golden = golden_section(channel);
  r.golden = golden.value;
  r.golden_at = golden.at;

  r.grid = chi2_mi_binary(0.5, channel);
  r.grid_at = 0.5;
  for (int i = 1; i < grid_points; ++i) {
    const double p = static_cast<double>(i) / grid_points;
    const double value = chi2_mi_binary(p, channel);
    if (value > r.grid) {
      r.grid = value;
      r.grid_at = p;
    }
  }

  double at_zero = 0;
  double at_one = 0;
  for (std::size_t y = 0; y < channel.output_size(); ++y) {
    const double plus = channel.given_plus()[y].to_double();
    const double minus = channel.given_minus()[y].to_double();
    if (channel.given_minus()[y].is_zero()) at_zero += plus;
    if (channel.given_plus()[y].is_zero()) at_one += minus;
  }
  r.boundary = std::max(at_zero, at_one);

  r.eta = r.golden;
  r.argmax = r.golden_at;
  if (r.grid > r.eta) {
    r.eta = r.grid;
    r.argmax = r.grid_at;
  }
  if (r.boundary > r.eta) {
    r.eta = r.boundary;
    r.argmax = at_zero >= at_one ? 0.0 : 1.0;
  }
  r.eta = std::min(1.0, std::max(0.0, r.eta));
  return r;
}

}  // namespace spinsync::info
