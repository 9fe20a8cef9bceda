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

#include "spinsync/mutual_info.hpp"

#include "spinsync/errors.hpp"

namespace spinsync::info {

namespace {

void require_binary(const Channel& channel) {
  if (!channel.is_binary()) {
    throw InvalidInput("binary-input channel required");
  }
}

void require_nondegenerate(const Rational& prior_plus) {
  if (prior_plus.sign() <= 0 || prior_plus >= Rational(1)) {
    throw InvalidInput("prior P[U=+1] = " + prior_plus.str() + " must lie strictly inside (0,1)");
  }
}

}  // namespace

JointTable channel_joint(const Rational& prior_plus, const Channel& channel) {
  require_binary(channel);
  if (!prior_plus.is_probability()) {
    throw InvalidInput("prior outside [0,1]");
  }
  const Rational prior_minus = Rational(1) - prior_plus;
  std::vector<std::vector<Rational>> mass(2, std::vector<Rational>(channel.output_size()));
  for (std::size_t y = 0; y < channel.output_size(); ++y) {
    mass[0][y] = prior_plus * channel.prob(0, y);
    mass[1][y] = prior_minus * channel.prob(1, y);
  }
  return JointTable({"+1", "-1"}, channel.alphabet(), std::move(mass));
}

Rational chi2_mi_binary(const Rational& prior_plus, const Channel& channel) {
  require_binary(channel);
  require_nondegenerate(prior_plus);
  const Rational pi = prior_plus;
  const Rational rho = Rational(1) - pi;
  const Rational mean = pi - rho;
  RationalSum variance;  // Var[E[U|A]]
  for (std::size_t y = 0; y < channel.output_size(); ++y) {
    const Rational p_y = pi * channel.prob(0, y) + rho * channel.prob(1, y);
    if (p_y.is_zero()) {
      continue;
    }
    const Rational posterior_mean = (pi * channel.prob(0, y) - rho * channel.prob(1, y)) / p_y;
    const Rational d = posterior_mean - mean;
    variance.add(p_y * d * d);
  }
  const Rational var_u = Rational(1) - mean * mean;
  return variance.total() / var_u;
}

double chi2_mi_binary(double prior_plus, const Channel& channel) {
  require_binary(channel);
  const double pi = prior_plus;
  const double rho = 1.0 - pi;
  double sum = 0.0;
  for (std::size_t y = 0; y < channel.output_size(); ++y) {
    const double qp = channel.prob(0, y).to_double();
    const double qm = channel.prob(1, y).to_double();
    const double p_y = pi * qp + rho * qm;
    if (p_y <= 0.0) {
      continue;
    }
    sum += (qp - qm) * (qp - qm) / p_y;
  }
  return pi * rho * sum;
}

KlBits kl_mi_binary(const Rational& prior_plus, const Channel& channel) {
  require_nondegenerate(prior_plus);
  return channel_joint(prior_plus, channel).kl_information();
}

}  // namespace spinsync::info
