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

#include <gtest/gtest.h>

#include <cmath>

#include "spinsync/mutual_info.hpp"
#include "spinsync/random_models.hpp"
#include "spinsync/sdpi.hpp"

namespace spinsync::info {
namespace {

TEST(Sdpi, BscAttainsMaximumAtFairPrior) {
  for (const Rational& eps : {Rational(0), Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(2, 7)}) {
    const double delta = 1 - 2 * eps.to_double();
    const SdpiResult r = sdpi_chi2_report(make_bsc(eps));
    EXPECT_NEAR(r.eta, delta * delta, 1e-9);
    EXPECT_NEAR(r.grid, delta * delta, 1e-9);
  }
}

TEST(Sdpi, NoiselessChannelIsOne) { EXPECT_NEAR(sdpi_chi2(make_noiseless()), 1.0, 1e-12); }

TEST(Sdpi, BernoulliPairApproachesSquaredRootGap) {
  for (const long n : {50L, 100L, 200L, 400L}) {
    const double target = std::pow(std::sqrt(3.0) - 1.0, 2) / static_cast<double>(n);
    const double eta = sdpi_chi2(make_bernoulli_pair(Rational(3), Rational(1), n));
    EXPECT_NEAR(eta, target, 10.0 / (static_cast<double>(n) * static_cast<double>(n)));
    EXPECT_GT(eta, edge_i2(make_bernoulli_pair(Rational(3), Rational(1), n)).to_double());
  }
}

TEST(Sdpi, BoundaryLimitIsCaught) {
  // Z-channel: Q(y | -1) vanishes on a symbol, so the supremum sits at the boundary.
  const Channel z({"0", "1"}, {{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(0)}});
  const SdpiResult r = sdpi_chi2_report(z);
  EXPECT_NEAR(r.boundary, 0.5, 1e-15);
  EXPECT_GE(r.eta, r.boundary);
  EXPECT_GE(r.eta, edge_i2(z).to_double());
}

TEST(Sdpi, NeverBelowFairPriorAndEqualForSymmetricChannels) {
  CounterRng rng(51, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const bool symmetric = trial % 2 == 0;
    const Channel q = symmetric ? gen::random_symmetric_channel(rng, 4) : gen::random_channel(rng, 4);
    const double eta = sdpi_chi2(q);
    const double fair = edge_i2(q).to_double();
    EXPECT_GE(eta, fair - 1e-15);
    EXPECT_LE(eta, 1.0);
    if (detect_symmetry(q)) EXPECT_NEAR(eta, fair, 1e-9);
  }
}

}  // namespace
}  // namespace spinsync::info
