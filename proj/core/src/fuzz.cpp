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

#include "spinsync/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "json.hpp"
#include "spinsync/bounds.hpp"
#include "spinsync/errors.hpp"
#include "spinsync/model_io.hpp"
#include "spinsync/random.hpp"
#include "spinsync/random_models.hpp"

namespace spinsync::bounds {

using nlohmann::ordered_json;

namespace {

// Relative slack on binary128 KL sums, far above their rounding error.
constexpr KlBits::Float kKlSlack = 1e-24Q;

struct TrialResult {
  std::vector<Finding> checks;
  bool skipped = false;
};

info::EnumerationOptions enumeration_options(const FuzzOptions& options) {
  info::EnumerationOptions e;
  e.state_budget = options.state_budget;
  return e;
}

std::vector<Finding> check_instance(ConjectureKind kind, const SyncModel& model, std::size_t u,
                                    const std::vector<std::size_t>& targets, const FuzzOptions& options) {
  Finding base;
  base.kind = kind;
  base.model_json = model_to_json(model, -1);
  base.u = model.graph().vertex_name(u);
  for (const std::size_t w : targets) base.targets.push_back(model.graph().vertex_name(w));
  const auto all = all_edges(model);
  const info::EnumerationOptions e = enumeration_options(options);

  if (kind == ConjectureKind::SpGeneralization) {
    Finding f = base;
    const Rational lhs = info::exact_i2_conditional(model, u, targets.front(), all, e);
    const Rational rhs = path_sum_bound(model, u, targets.front(), options.path_budget);
    f.quantity = "I2";
    f.lhs = lhs.str();
    f.rhs = rhs.str();
    f.violated = lhs > rhs;
    return {f};
  }

  const TiedModel tied = tie_vertex_set(model, targets);
  const info::ConditionalInfo joint = info::exact_conditional_info(tied.model, u, tied.target, all_edges(tied.model), e);
  Rational sum_i2;
  KlBits sum_kl;
  for (const std::size_t w : targets) {
    const info::ConditionalInfo single = info::exact_conditional_info(model, u, w, all, e);
    sum_i2 += single.chi2;
    sum_kl += single.kl;
  }
  Finding i2 = base;
  i2.quantity = "I2";
  i2.lhs = joint.chi2.str();
  i2.rhs = sum_i2.str();
  i2.violated = joint.chi2 > sum_i2;
  Finding kl = base;
  kl.quantity = "IKL";
  kl.lhs = joint.kl.str(36);
  kl.rhs = sum_kl.str(36);
  const KlBits::Float scale = std::max<KlBits::Float>(1, sum_kl.value());
  kl.violated = joint.kl.value() > sum_kl.value() + kKlSlack * scale;
  return {i2, kl};
}

std::vector<std::size_t> resolve(const MultiGraph& g, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& name : names) out.push_back(g.vertex(name));
  return out;
}

TrialResult run_trial(std::uint64_t trial, const FuzzOptions& options) {
  CounterRng rng(options.seed, trial);
  const std::size_t max_n = std::max<std::size_t>(options.max_vertices, 3);
  std::optional<MultiGraph> graph;
  std::size_t u = 0;
  std::vector<std::size_t> targets;
  if (options.kind == ConjectureKind::SpGeneralization) {
    if (!options.include_sp || rng.below(2) == 0) {
      graph = gen::random_k4_subdivision(rng, 2);
      u = graph->terminals()->first;
      targets = {graph->terminals()->second};
    } else {
      const std::size_t n = 3 + rng.below(max_n - 2);
      graph = gen::random_connected_graph(rng, n, n - 1 + rng.below(options.max_extra_edges + 1));
      u = rng.below(n);
      targets = {(u + 1 + rng.below(n - 1)) % n};
    }
  } else {
    const std::size_t n = 3 + rng.below(max_n - 2);
    graph = gen::random_connected_graph(rng, n, n - 1 + rng.below(options.max_extra_edges + 1));
    u = rng.below(n);
    std::vector<std::size_t> others;
    for (std::size_t x = 0; x < n; ++x) {
      if (x != u) others.push_back(x);
    }
    const std::size_t size = 1 + rng.below(std::min<std::size_t>(3, others.size()));
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t pick = i + rng.below(others.size() - i);
      std::swap(others[i], others[pick]);
      targets.push_back(others[i]);
    }
    std::sort(targets.begin(), targets.end());
  }
  const SyncModel model = gen::random_model(rng, *graph, gen::ChannelKind::General, options.max_alphabet);
  TrialResult result;
  try {
    result.checks = check_instance(options.kind, model, u, targets, options);
  } catch (const BudgetExceeded&) {
    result.skipped = true;
  }
  for (Finding& f : result.checks) f.trial = trial;
  return result;
}

ordered_json finding_to_json(const Finding& f) {
  ordered_json j;
  j["trial"] = f.trial;
  j["kind"] = to_string(f.kind);
  j["model"] = ordered_json::parse(f.model_json);
  j["u"] = f.u;
  j["W"] = f.targets;
  j["quantity"] = f.quantity;
  j["lhs"] = f.lhs;
  j["rhs"] = f.rhs;
  j["violated"] = f.violated;
  return j;
}

}  // namespace

std::string to_string(ConjectureKind kind) {
  return kind == ConjectureKind::SpGeneralization ? "sp-general" : "setwise";
}

ConjectureKind parse_conjecture_kind(const std::string& text) {
  if (text == "sp-general") return ConjectureKind::SpGeneralization;
  if (text == "setwise") return ConjectureKind::Setwise;
  throw InvalidInput("unknown conjecture kind '" + text + "' (expected sp-general or setwise)");
}

FuzzReport conjecture_fuzz(const FuzzOptions& options) {
  FuzzReport report;
  report.kind = options.kind;
  report.trials = options.trials;
  report.seed = options.seed;
  report.generator = kGeneratorName;

  std::vector<TrialResult> results(options.trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < options.trials; t = next++) results[t] = run_trial(t, options);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
  }
  for (TrialResult& r : results) {
    if (r.skipped) ++report.skipped;
    for (Finding& f : r.checks) {
      ++report.checks;
      if (f.violated) ++report.violations;
      if (f.violated || options.record_all) report.findings.push_back(std::move(f));
    }
  }
  return report;
}

Finding evaluate_finding(const Finding& finding, const FuzzOptions& options) {
  const SyncModel model = parse_model(finding.model_json);
  const std::size_t u = model.graph().vertex(finding.u);
  const std::vector<std::size_t> targets = resolve(model.graph(), finding.targets);
  if (targets.empty()) throw InvalidInput("finding has an empty W");
  for (Finding& f : check_instance(finding.kind, model, u, targets, options)) {
    if (f.quantity == finding.quantity) {
      f.trial = finding.trial;
      return f;
    }
  }
  throw InvalidInput("finding has unknown quantity '" + finding.quantity + "'");
}

std::string fuzz_report_to_json(const FuzzReport& report) {
  ordered_json doc;
  doc["kind"] = to_string(report.kind);
  doc["seed"] = report.seed;
  doc["trials"] = report.trials;
  doc["generator"] = report.generator;
  doc["checks"] = report.checks;
  doc["violations"] = report.violations;
  doc["skipped"] = report.skipped;
  doc["findings"] = ordered_json::array();
  for (const Finding& f : report.findings) doc["findings"].push_back(finding_to_json(f));
  return doc.dump(2) + "\n";
}

FuzzReport fuzz_report_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    FuzzReport report;
    report.kind = parse_conjecture_kind(doc.at("kind").get<std::string>());
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.trials = doc.at("trials").get<std::uint64_t>();
    report.generator = doc.at("generator").get<std::string>();
    report.checks = doc.value("checks", std::uint64_t{0});
    report.violations = doc.value("violations", std::uint64_t{0});
    report.skipped = doc.value("skipped", std::uint64_t{0});
    for (const auto& j : doc.at("findings")) {
      Finding f;
      f.trial = j.at("trial").get<std::uint64_t>();
      f.kind = parse_conjecture_kind(j.at("kind").get<std::string>());
      f.model_json = j.at("model").dump();
      f.u = j.at("u").get<std::string>();
      f.targets = j.at("W").get<std::vector<std::string>>();
      f.quantity = j.at("quantity").get<std::string>();
      f.lhs = j.at("lhs").get<std::string>();
      f.rhs = j.at("rhs").get<std::string>();
      f.violated = j.at("violated").get<bool>();
      report.findings.push_back(std::move(f));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("findings file: ") + e.what());
  }
}

std::vector<ReplayResult> replay_findings(const FuzzReport& report, const FuzzOptions& options) {
  std::vector<ReplayResult> out;
  for (const Finding& f : report.findings) out.push_back(ReplayResult{f, evaluate_finding(f, options)});
  return out;
}

}  // namespace spinsync::bounds
