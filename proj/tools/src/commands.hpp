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

#include <string>

#include "common.hpp"
#include "spinsync_cli/app.hpp"

namespace spinsync::cli {

struct Output {
  std::string text;
  int status = 0;
};

struct InfoArgs {
  Common c;
  std::optional<std::string> observed;  // comma list of edge ids; empty means no edge
  std::string mode = "exact";
};
Output cmd_info(const InfoArgs& a);

Output cmd_bounds(const Common& c);

struct SpArgs {
  Common c;
  bool paths = false;
};
Output cmd_sp(const SpArgs& a);

struct TiedTreeArgs {
  Common c;
  std::string a = "3";
  std::string b = "1";
  std::string n = "100";
  std::string depth = "1..4";
  std::string d = "2";  // or "n"
  std::string mode = "analytic";
};
Output cmd_experiment_tied_tree(const TiedTreeArgs& a);

struct BotArgs {
  Common c;  // --model is optional here: a tree whose channels are ignored
  std::size_t branching = 2;
  std::size_t depth = 2;
  std::string root;
  std::string eps = "1/10";
};
Output cmd_experiment_bot(const BotArgs& a);

struct CounterexampleArgs {
  Common c;
  std::string delta = "1/5";
  std::string eps = "1/5";
};
Output cmd_experiment_counterexamples(const CounterexampleArgs& a);

struct InterpolationArgs {
  Common c;
  std::string edge;
  std::size_t grid = 11;
};
Output cmd_experiment_interpolation(const InterpolationArgs& a);

struct FuzzArgs {
  Common c;
  std::string kind = "sp-general";
  std::size_t max_vertices = 5;
  std::size_t max_extra_edges = 3;
  std::size_t max_alphabet = 4;
  bool record_all = false;
  std::string replay;
};
Output cmd_fuzz(const FuzzArgs& a);

struct MakeArgs {
  Common c;
  std::string kind;  // bsc-tree, tied-tree, bernoulli-pair
  std::size_t branching = 2;
  std::size_t depth = 2;
  std::string eps = "1/10";
  bool tie = false;
  std::string a = "3";
  std::string b = "1";
  long n = 100;
};
Output cmd_make(const MakeArgs& a);

}  // namespace spinsync::cli
