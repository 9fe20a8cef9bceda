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
#include <string>
#include <vector>

#include "spinsync/enumeration.hpp"
#include "spinsync/paths.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::bounds {

enum class ConjectureKind {
  SpGeneralization,  // I2(X_u; X_v | Y) <= sum over paths of I2(X_u; X_v | Y_P), any graph
  Setwise,           // I(X_u; X_W | Y) <= sum over w of I(X_u; X_w | Y), for I2 and I_KL
};

std::string to_string(ConjectureKind kind);
ConjectureKind parse_conjecture_kind(const std::string& text);

struct FuzzOptions {
  ConjectureKind kind = ConjectureKind::SpGeneralization;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 5;
  std::size_t max_extra_edges = 3;  // beyond a spanning tree
  std::size_t max_alphabet = 4;
  bool include_sp = true;     // SpGeneralization: also sample graphs that may be series-parallel
  bool record_all = false;    // keep non-violating checks in the findings too
  std::uint64_t state_budget = info::kDefaultStateBudget;
  std::uint64_t path_budget = sp::kDefaultPathBudget;
  unsigned jobs = 1;
};

/// One checked inequality lhs <= rhs. I2 sides are exact rationals "p/q";
/// I_KL sides are 36-digit binary128 decimals.
struct Finding {
  std::uint64_t trial = 0;
  ConjectureKind kind = ConjectureKind::SpGeneralization;
  std::string model_json;  // model file text
  std::string u;
  std::vector<std::string> targets;
  std::string quantity;  // "I2" or "IKL"
  std::string lhs;
  std::string rhs;
  bool violated = false;
};

struct FuzzReport {
  ConjectureKind kind = ConjectureKind::SpGeneralization;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string generator;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;  // trials over a budget
  std::vector<Finding> findings;
};

/// Trial t draws from counter stream t of the seeded generator; results merge
/// by trial index, so the report does not depend on `jobs`.
FuzzReport conjecture_fuzz(const FuzzOptions& options);

/// Recomputes both sides of a finding.
Finding evaluate_finding(const Finding& finding, const FuzzOptions& options = {});

/// JSON document: run header plus `findings`, each
/// {trial, kind, model, u, W, quantity, lhs, rhs, violated}.
std::string fuzz_report_to_json(const FuzzReport& report);
FuzzReport fuzz_report_from_json(const std::string& text);

struct ReplayResult {
  Finding recorded;
  Finding replayed;
  bool identical() const {
    return recorded.lhs == replayed.lhs && recorded.rhs == replayed.rhs && recorded.violated == replayed.violated;
  }
};

std::vector<ReplayResult> replay_findings(const FuzzReport& report, const FuzzOptions& options = {});

}  // namespace spinsync::bounds
