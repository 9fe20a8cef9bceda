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

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "spinsync/errors.hpp"
#include "spinsync/fuzz.hpp"
#include "spinsync/model_io.hpp"
#include "spinsync/tied_tree.hpp"

namespace spinsync::cli {

using nlohmann::ordered_json;

Output cmd_fuzz(const FuzzArgs& a) {
  bounds::FuzzOptions options;
  options.kind = bounds::parse_conjecture_kind(a.kind);
  options.max_vertices = a.max_vertices;
  options.max_extra_edges = a.max_extra_edges;
  options.max_alphabet = a.max_alphabet;
  options.record_all = a.record_all;
  options.state_budget = a.c.budget_states;
  options.path_budget = a.c.budget_paths;
  options.jobs = a.c.jobs;

  if (!a.replay.empty()) {
    std::ifstream in(a.replay, std::ios::binary);
    if (!in) throw InvalidInput("cannot read findings file '" + a.replay + "'");
    std::ostringstream text;
    text << in.rdbuf();
    const bounds::FuzzReport report = bounds::fuzz_report_from_json(text.str());
    bool all = true;
    ordered_json j = ordered_json::array();
    std::string s;
    for (const bounds::ReplayResult& r : bounds::replay_findings(report, options)) {
      all = all && r.identical();
      const std::string verdict = r.identical() ? "identical" : "differs";
      s += "trial " + std::to_string(r.recorded.trial) + " " + r.recorded.quantity + ": " + verdict +
           " lhs=" + r.replayed.lhs + " rhs=" + r.replayed.rhs + " violated=" + flag(r.replayed.violated) + "\n";
      j.push_back({{"trial", r.recorded.trial},
                   {"quantity", r.recorded.quantity},
                   {"identical", r.identical()},
                   {"lhs", r.replayed.lhs},
                   {"rhs", r.replayed.rhs},
                   {"violated", r.replayed.violated}});
    }
    s += "replayed " + std::to_string(report.findings.size()) + " finding(s): " +
         (all ? "all identical" : "some differ") + "\n";
    const bool json = a.c.format_or(Format::Text) == Format::Json;
    return {json ? j.dump(2) + "\n" : s, all ? kExitOk : kExitCheckFailed};
  }

  if (!a.c.seed) throw InvalidInput("--seed is required");
  options.seed = *a.c.seed;
  options.trials = a.c.trials.value_or(options.trials);
  return {bounds::fuzz_report_to_json(bounds::conjecture_fuzz(options)), kExitOk};
}

Output cmd_make(const MakeArgs& a) {
  if (a.n <= 0) throw InvalidInput("--n must be positive");
  SyncModel model = [&] {
    if (a.kind == "bsc-tree") {
      const MultiGraph tree = regular_tree(a.branching, a.depth);
      const SyncModel m = bsc_model(tree, parse_rational(a.eps, "--eps"));
      return a.tie ? sp::tied_tree_build(m, 0) : m;
    }
    if (a.kind == "tied-tree") {
      const MultiGraph tree = regular_tree(a.branching, a.depth);
      const Channel channel = make_bernoulli_pair(parse_rational(a.a, "--a"), parse_rational(a.b, "--b"), a.n);
      return sp::tied_tree_build(SyncModel(tree, std::vector<Channel>(tree.edge_count(), channel)), 0);
    }
    if (a.kind == "bernoulli-pair") {
      const SyncModel m = bernoulli_pair_model(parse_rational(a.a, "--a"), parse_rational(a.b, "--b"), a.n);
      return m.with_terminals(0, 1);
    }
    throw InvalidInput("unknown builder '" + a.kind + "'");
  }();
  return {model_to_json(model), kExitOk};
}

}  // namespace spinsync::cli
