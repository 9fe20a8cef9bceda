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

#include "spinsync/rational.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::bounds {

/// Two vertices with P[X = +1] = delta, joined by two BSC(epsilon) edges e, f.
SyncModel nonuniform_pair_model(const Rational& delta, const Rational& epsilon);

struct NonuniformReport {
  Rational delta;
  Rational epsilon;
  Rational joint_formula;   // closed form of I2(X_u; X_v | Y_e, Y_f)
  Rational single_formula;  // closed form of I2(X_u; X_v | Y_e)
  Rational joint_enumerated;
  Rational single_e_enumerated;
  Rational single_f_enumerated;
  bool formulas_match = false;          // closed forms equal the enumerated values
  bool subadditivity_violated = false;  // joint > single_e + single_f
};

/// Throws InvalidInput unless 0 < delta < 1 and 0 <= epsilon <= 1.
NonuniformReport counterexample_nonuniform(const Rational& delta, const Rational& epsilon);

/// Spoon on Z/4Z: edge e = (u, v) and parallel edges f1, f2 = (v, w). Y_e and
/// Y_f1 report whether the difference lies in {0, 1}; Y_f2 whether it lies in {0, 2}.
SyncModel group_spoon_model();

struct GroupSpoonReport {
  Rational full;     // I2(X_u; X_w | Y_e, Y_f1, Y_f2)
  Rational with_f1;  // I2(X_u; X_w | Y_e, Y_f1)
  Rational with_f2;  // I2(X_u; X_w | Y_e, Y_f2)
  bool reproduced = false;          // (1, 1/2, 0)
  bool subadditivity_fails = false;  // full > with_f1 + with_f2
};

GroupSpoonReport counterexample_group_spoon();

}  // namespace spinsync::bounds
