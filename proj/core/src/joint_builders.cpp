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

#include "spinsync/joint_builders.hpp"

#include <map>
#include <string>

#include "spinsync/errors.hpp"

namespace spinsync::info {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    return UINT64_MAX;
  }
  return a * b;
}

std::string join_labels(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out.empty() ? "-" : out;
}

// Mixed-radix index of `digits` with the given radices (first digit most significant).
std::size_t mixed_index(std::span<const std::size_t> digits, std::span<const std::size_t> radices) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    index = index * radices[i] + digits[i];
  }
  return index;
}

std::vector<std::size_t> outcome_radices(const SyncModel& model, std::span<const std::size_t> observed) {
  std::vector<std::size_t> radices;
  for (const std::size_t e : observed) {
    radices.push_back(model.channel(e).output_size());
  }
  return radices;
}

std::vector<std::string> outcome_labels(const SyncModel& model, std::span<const std::size_t> observed) {
  const auto radices = outcome_radices(model, observed);
  std::size_t count = 1;
  for (const auto r : radices) count *= r;
  std::vector<std::string> labels;
  labels.reserve(count);
  std::vector<std::size_t> digits(observed.size(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < observed.size(); ++j) {
      parts.push_back(model.channel(observed[j]).symbol(digits[j]));
    }
    labels.push_back(join_labels(parts));
    for (std::size_t j = observed.size(); j-- > 0;) {
      if (++digits[j] < radices[j]) break;
      digits[j] = 0;
    }
  }
  return labels;
}

void check_vertex(const SyncModel& model, std::size_t v) {
  if (v >= model.graph().vertex_count()) {
    throw InvalidInput("vertex index out of range");
  }
}

}  // namespace

void for_each_configuration(const SyncModel& model, std::span<const std::size_t> observed, std::uint64_t budget,
                            const ConfigurationVisitor& visit) {
  const GroupSpec& group = model.group();
  const std::size_t k = group.order();
  const std::size_t n = model.graph().vertex_count();
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) states = saturating_mul(states, k);
  for (const std::size_t e : observed) {
    if (e >= model.graph().edge_count()) {
      throw InvalidInput("observed edge index out of range");
    }
    states = saturating_mul(states, model.channel(e).output_size());
  }
  if (states > budget) {
    throw BudgetExceeded("explicit joint needs " + std::to_string(states) + " states, budget is " +
                         std::to_string(budget));
  }

  std::vector<std::size_t> spins(n, 0);
  std::vector<std::size_t> outcome(observed.size(), 0);
  const auto radices = outcome_radices(model, observed);
  for (;;) {
    Rational prior(1);
    if (model.has_uniform_prior()) {
      prior = Rational(1, 1);
      for (std::size_t i = 0; i < n; ++i) prior *= Rational(1, static_cast<long>(k));
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        const Rational p = model.prior_plus(i);
        prior *= spins[i] == 0 ? p : Rational(1) - p;
      }
    }
    if (!prior.is_zero()) {
      std::fill(outcome.begin(), outcome.end(), 0);
      for (;;) {
        Rational mass = prior;
        for (std::size_t j = 0; j < observed.size() && !mass.is_zero(); ++j) {
          const Edge& edge = model.graph().edge(observed[j]);
          mass *= model.channel(observed[j]).prob(group.sub(spins[edge.u], spins[edge.v]), outcome[j]);
        }
        if (!mass.is_zero()) {
          visit(spins, outcome, mass);
        }
        std::size_t j = observed.size();
        while (j > 0) {
          --j;
          if (++outcome[j] < radices[j]) break;
          outcome[j] = 0;
          if (j == 0) { j = SIZE_MAX; break; }
        }
        if (j == SIZE_MAX || observed.empty()) break;
      }
    }
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++spins[i] < k) { done = false; break; }
      spins[i] = 0;
    }
    if (done) break;
  }
}

JointTable spin_vs_evidence_joint(const SyncModel& model, std::size_t u, std::span<const std::size_t> conditioning,
                                  std::span<const std::size_t> observed, std::uint64_t budget) {
  check_vertex(model, u);
  const GroupSpec& group = model.group();
  const std::size_t k = group.order();
  const auto radices = outcome_radices(model, observed);
  std::size_t outcomes = 1;
  for (const auto r : radices) outcomes *= r;
  std::size_t patterns = 1;
  for (const std::size_t w : conditioning) {
    check_vertex(model, w);
    patterns *= k;
  }
  std::vector<std::vector<Rational>> mass(k, std::vector<Rational>(patterns * outcomes));
  std::vector<std::size_t> pattern_digits(conditioning.size());
  const std::vector<std::size_t> pattern_radices(conditioning.size(), k);
  for_each_configuration(model, observed, budget, [&](auto spins, auto outcome, const Rational& m) {
    for (std::size_t i = 0; i < conditioning.size(); ++i) pattern_digits[i] = spins[conditioning[i]];
    const std::size_t col = mixed_index(pattern_digits, pattern_radices) * outcomes + mixed_index(outcome, radices);
    mass[spins[u]][col] += m;
  });

  std::vector<std::string> rows;
  for (std::size_t g = 0; g < k; ++g) rows.push_back(group.element_label(g));
  const auto y_labels = outcome_labels(model, observed);
  std::vector<std::string> cols;
  cols.reserve(patterns * outcomes);
  std::vector<std::size_t> digits(conditioning.size(), 0);
  for (std::size_t p = 0; p < patterns; ++p) {
    std::vector<std::string> parts;
    for (const auto d : digits) parts.push_back(group.element_label(d));
    const std::string prefix = join_labels(parts);
    for (const auto& y : y_labels) cols.push_back(prefix + "|" + y);
    for (std::size_t j = digits.size(); j-- > 0;) {
      if (++digits[j] < k) break;
      digits[j] = 0;
    }
  }
  return JointTable(std::move(rows), std::move(cols), std::move(mass));
}

JointTable difference_vs_observation_joint(const SyncModel& model, std::size_t u, std::size_t v,
                                           std::span<const std::size_t> observed, std::uint64_t budget) {
  check_vertex(model, u);
  check_vertex(model, v);
  const GroupSpec& group = model.group();
  const std::size_t k = group.order();
  const auto radices = outcome_radices(model, observed);
  std::size_t outcomes = 1;
  for (const auto r : radices) outcomes *= r;
  std::vector<std::vector<Rational>> mass(k, std::vector<Rational>(outcomes));
  for_each_configuration(model, observed, budget, [&](auto spins, auto outcome, const Rational& m) {
    mass[group.sub(spins[u], spins[v])][mixed_index(outcome, radices)] += m;
  });
  std::vector<std::string> rows;
  for (std::size_t g = 0; g < k; ++g) rows.push_back(group.element_label(g));
  return JointTable(std::move(rows), outcome_labels(model, observed), std::move(mass));
}

std::vector<JointTable> conditional_pair_tables(const SyncModel& model, std::size_t u, std::size_t v,
                                                std::span<const std::size_t> observed, std::uint64_t budget) {
  if (u == v) {
    throw InvalidInput("conditional information needs two distinct vertices");
  }
  const std::size_t target[] = {v};
  return conditional_set_tables(model, u, target, observed, budget);
}

std::vector<JointTable> conditional_set_tables(const SyncModel& model, std::size_t u,
                                               std::span<const std::size_t> conditioning,
                                               std::span<const std::size_t> observed, std::uint64_t budget) {
  check_vertex(model, u);
  const GroupSpec& group = model.group();
  const std::size_t k = group.order();
  std::size_t patterns = 1;
  for (const std::size_t w : conditioning) {
    check_vertex(model, w);
    patterns *= k;
  }
  const auto radices = outcome_radices(model, observed);
  const std::vector<std::size_t> pattern_radices(conditioning.size(), k);
  std::vector<std::size_t> digits(conditioning.size());
  std::map<std::size_t, std::vector<std::vector<Rational>>> by_outcome;
  for_each_configuration(model, observed, budget, [&](auto spins, auto outcome, const Rational& m) {
    auto& table = by_outcome[mixed_index(outcome, radices)];
    if (table.empty()) table.assign(k, std::vector<Rational>(patterns));
    for (std::size_t i = 0; i < conditioning.size(); ++i) digits[i] = spins[conditioning[i]];
    table[spins[u]][mixed_index(digits, pattern_radices)] += m;
  });
  std::vector<std::string> rows;
  for (std::size_t g = 0; g < k; ++g) rows.push_back(group.element_label(g));
  std::vector<std::string> cols;
  std::fill(digits.begin(), digits.end(), 0);
  for (std::size_t p = 0; p < patterns; ++p) {
    std::vector<std::string> parts;
    for (const auto d : digits) parts.push_back(group.element_label(d));
    cols.push_back(join_labels(parts));
    for (std::size_t j = digits.size(); j-- > 0;) {
      if (++digits[j] < k) break;
      digits[j] = 0;
    }
  }
  std::vector<JointTable> tables;
  tables.reserve(by_outcome.size());
  for (auto& [index, table] : by_outcome) {
    tables.emplace_back(rows, cols, std::move(table));
  }
  return tables;
}

}  // namespace spinsync::info
