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
#include "spinsync/f_divergence.hpp"
#include "spinsync/kl_bits.hpp"
#include "spinsync/rational.hpp"

namespace spinsync::info {

/// Joint of a binary input U with P[U=+1] = prior_plus (rows "+1", "-1")
/// and the channel output A (columns).
JointTable channel_joint(const Rational& prior_plus, const Channel& channel);

/// I2(U; A) = Var[E[U|A]] / Var[U] for U ~ Rad(prior_plus) sent through the
/// channel. Throws InvalidInput for a degenerate prior or non-binary input.
Rational chi2_mi_binary(const Rational& prior_plus, const Channel& channel);

/// Floating-point evaluation of the same map, used by the SDPI search.
double chi2_mi_binary(double prior_plus, const Channel& channel);

/// I_KL(U; A) in bits.
KlBits kl_mi_binary(const Rational& prior_plus, const Channel& channel);

/// I2 of a single edge with uniform spins: I2(X_i; X_j | Y_ij).
inline Rational edge_i2(const Channel& channel) { return chi2_mi_binary(Rational(1, 2), channel); }

}  // namespace spinsync::info
