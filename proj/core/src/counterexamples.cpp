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

#include "spinsync/counterexamples.hpp"

#include "spinsync/enumeration.hpp"
#include "spinsync/errors.hpp"

namespace spinsync::bounds {

namespace {

// Deterministic Z/4Z channel: output "1" exactly on the listed differences.
Channel indicator_channel(std::initializer_list<std::size_t> ones) {
  std::vector<std::vector<Rational>> rows(4, {Rational(1), Rational(0)});
  for (const std::size_t g : ones) rows[g] = {Rational(0), Rational(1)};
  return Channel({"0", "1"}, std::move(rows));
}

}  // namespace

SyncModel nonuniform_pair_model(const Rational& delta, const Rational& epsilon) {
  MultiGraph graph({"u", "v"}, {{"e", "u", "v"}, {"f", "u", "v"}}, std::make_pair(std::string("u"), std::string("v")));
  return SyncModel(std::move(graph), {make_bsc(epsilon), make_bsc(epsilon)}, GroupSpec::binary(),
                   std::vector<Rational>{delta, delta});
}

NonuniformReport counterexample_nonuniform(const Rational& delta, const Rational& epsilon) {
  if (delta <= Rational(0) || delta >= Rational(1)) throw InvalidInput("delta must lie strictly between 0 and 1");
  if (!epsilon.is_probability()) throw InvalidInput("epsilon must lie in [0, 1]");
  const Rational& d = delta;
  const Rational& e = epsilon;
  const Rational one(1);

  NonuniformReport r;
  r.delta = delta;
  r.epsilon = epsilon;
  const Rational numerator = d * d * (one - d) * (one - d) * pow(one - 2 * e, 2);
  const Rational joint_den = -4 * d * d * e * e + 4 * d * d * e - d * d + 4 * d * e * e - 4 * d * e + d +
                             pow(e, 4) - 2 * pow(e, 3) + e * e;
  const Rational single_den =
      -4 * d * d * e * e + 4 * d * d * e - d * d + 4 * d * e * e - 4 * d * e + d - e * e + e;
  r.joint_formula = numerator * pow(e * e + (one - e) * (one - e), 3) / (joint_den * joint_den);
  r.single_formula = numerator / (single_den * single_den);

  const SyncModel model = nonuniform_pair_model(delta, epsilon);
  const std::size_t both[] = {0, 1};
  const std::size_t only_e[] = {0};
  const std::size_t only_f[] = {1};
  r.joint_enumerated = info::exact_i2_conditional(model, 0, 1, both);
  r.single_e_enumerated = info::exact_i2_conditional(model, 0, 1, only_e);
  r.single_f_enumerated = info::exact_i2_conditional(model, 0, 1, only_f);
  r.formulas_match = r.joint_formula == r.joint_enumerated && r.single_formula == r.single_e_enumerated &&
                     r.single_formula == r.single_f_enumerated;
  r.subadditivity_violated = r.joint_enumerated > r.single_e_enumerated + r.single_f_enumerated;
  return r;
}

SyncModel group_spoon_model() {
  MultiGraph graph({"u", "v", "w"}, {{"e", "u", "v"}, {"f1", "v", "w"}, {"f2", "v", "w"}},
                   std::make_pair(std::string("u"), std::string("w")));
  return SyncModel(std::move(graph), {indicator_channel({2, 3}), indicator_channel({2, 3}), indicator_channel({1, 3})},
                   GroupSpec(4));
}

GroupSpoonReport counterexample_group_spoon() {
  const SyncModel model = group_spoon_model();
  const std::size_t all[] = {0, 1, 2};
  const std::size_t with_f1[] = {0, 1};
  const std::size_t with_f2[] = {0, 2};
  GroupSpoonReport r;
  r.full = info::exact_i2_conditional(model, 0, 2, all);
  r.with_f1 = info::exact_i2_conditional(model, 0, 2, with_f1);
  r.with_f2 = info::exact_i2_conditional(model, 0, 2, with_f2);
  r.reproduced = r.full == Rational(1) && r.with_f1 == Rational(1, 2) && r.with_f2 == Rational(0);
  r.subadditivity_fails = r.full > r.with_f1 + r.with_f2;
  return r;
}

}  // namespace spinsync::bounds
