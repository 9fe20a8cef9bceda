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

#include "spinsync/percolation.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "spinsync/errors.hpp"
#include "spinsync/random.hpp"

namespace spinsync::sp {

namespace {

enum class State : unsigned char { Closed, Open, Undecided };

template <class T>
class SubsetWalker {
 public:
  SubsetWalker(const MultiGraph& g, std::span<const T> gamma, std::size_t u, std::span<const std::size_t> targets)
      : g_(g), gamma_(gamma), u_(u), target_(g.vertex_count(), false), state_(g.edge_count(), State::Undecided) {
    for (const std::size_t w : targets) target_[w] = true;
    // Edges in breadth-first order from u decide the outcome sooner.
    std::vector<bool> seen_vertex(g.vertex_count(), false);
    std::vector<bool> seen_edge(g.edge_count(), false);
    std::vector<std::size_t> queue{u};
    seen_vertex[u] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const std::size_t e : g.incident(queue[i])) {
        if (!seen_edge[e]) {
          seen_edge[e] = true;
          order_.push_back(e);
        }
        const std::size_t next = g.edge(e).other(queue[i]);
        if (!seen_vertex[next]) {
          seen_vertex[next] = true;
          queue.push_back(next);
        }
      }
    }
  }

  T run() {
    if (target_[u_]) return T(1);
    return branch(0);
  }

 private:
  // Whether u reaches a target using edges in an allowed state.
  bool reaches(bool allow_undecided) const {
    std::vector<bool> seen(g_.vertex_count(), false);
    std::vector<std::size_t> stack{u_};
    seen[u_] = true;
    while (!stack.empty()) {
      const std::size_t at = stack.back();
      stack.pop_back();
      if (target_[at]) return true;
      for (const std::size_t e : g_.incident(at)) {
        if (state_[e] == State::Closed || (state_[e] == State::Undecided && !allow_undecided)) continue;
        const std::size_t next = g_.edge(e).other(at);
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
    return false;
  }

  T branch(std::size_t i) {
    if (reaches(false)) return T(1);
    if (!reaches(true)) return T(0);
    const std::size_t e = order_[i];
    state_[e] = State::Open;
    const T open = branch(i + 1);
    state_[e] = State::Closed;
    const T closed = branch(i + 1);
    state_[e] = State::Undecided;
    return gamma_[e] * open + (T(1) - gamma_[e]) * closed;
  }

  const MultiGraph& g_;
  std::span<const T> gamma_;
  std::size_t u_;
  std::vector<bool> target_;
  std::vector<State> state_;
  std::vector<std::size_t> order_;
};

template <class T>
void check_probabilities(const MultiGraph& g, std::span<const T> gamma) {
  if (gamma.size() != g.edge_count()) {
    throw InvalidInput("need one open probability per edge");
  }
  for (const T& p : gamma) {
    if (!(p >= T(0) && p <= T(1))) throw InvalidInput("open probability outside [0,1]");
  }
}

void check_vertices(const MultiGraph& g, std::size_t u, std::span<const std::size_t> targets) {
  if (u >= g.vertex_count()) throw InvalidInput("vertex out of range");
  if (targets.empty()) throw InvalidInput("vertex set W is empty");
  for (const std::size_t w : targets) {
    if (w >= g.vertex_count()) throw InvalidInput("vertex out of range");
  }
}

template <class T>
T exact_subsets(const MultiGraph& g, std::span<const T> gamma, std::size_t u, std::span<const std::size_t> targets,
                std::size_t edge_budget) {
  check_probabilities(g, gamma);
  check_vertices(g, u, targets);
  if (g.edge_count() > edge_budget) {
    throw BudgetExceeded("subset enumeration over " + std::to_string(g.edge_count()) + " edges exceeds the budget of " +
                         std::to_string(edge_budget));
  }
  return SubsetWalker<T>(g, gamma, u, targets).run();
}

template <class T>
T sp_reliability(const SPTree& tree, std::span<const T> gamma) {
  if (gamma.size() != tree.edge_ids().size()) {
    throw InvalidInput("need one open probability per edge");
  }
  return tree.fold<T>([&](std::size_t e, std::size_t, std::size_t) { return gamma[e]; },
                      [](const T& a, const T& b) { return a * b; },
                      [](const T& a, const T& b) { return T(1) - (T(1) - a) * (T(1) - b); });
}

}  // namespace

Rational conn_exact_subsets(const MultiGraph& g, std::span<const Rational> gamma, std::size_t u,
                            std::span<const std::size_t> targets, std::size_t edge_budget) {
  return exact_subsets<Rational>(g, gamma, u, targets, edge_budget);
}

double conn_exact_subsets(const MultiGraph& g, std::span<const double> gamma, std::size_t u,
                          std::span<const std::size_t> targets, std::size_t edge_budget) {
  return exact_subsets<double>(g, gamma, u, targets, edge_budget);
}

Rational conn_sp_reliability(const SPTree& tree, std::span<const Rational> gamma) {
  return sp_reliability<Rational>(tree, gamma);
}

double conn_sp_reliability(const SPTree& tree, std::span<const double> gamma) {
  return sp_reliability<double>(tree, gamma);
}

MonteCarloEstimate conn_monte_carlo(const MultiGraph& g, std::span<const double> gamma, std::size_t u,
                                    std::span<const std::size_t> targets, std::uint64_t trials, std::uint64_t seed,
                                    unsigned jobs) {
  check_probabilities(g, gamma);
  check_vertices(g, u, targets);
  if (trials == 0) {
    throw InvalidInput("Monte Carlo needs at least one trial");
  }
  std::vector<bool> target(g.vertex_count(), false);
  for (const std::size_t w : targets) target[w] = true;

  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  auto run_chunk = [&](std::uint64_t c) {
    DisjointSets sets(g.vertex_count());
    const std::uint64_t end = std::min(trials, (c + 1) * kChunk);
    std::uint64_t count = 0;
    for (std::uint64_t t = c * kChunk; t < end; ++t) {
      CounterRng rng(seed, t);
      sets = DisjointSets(g.vertex_count());
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (rng.uniform() < gamma[e]) sets.unite(g.edge(e).u, g.edge(e).v);
      }
      bool hit = false;
      for (std::size_t w = 0; w < g.vertex_count() && !hit; ++w) {
        hit = target[w] && sets.find(w) == sets.find(u);
      }
      count += hit ? 1 : 0;
    }
    hits[c] = count;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(chunks, 1024))));
  if (workers == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < workers; ++j) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  MonteCarloEstimate out;
  for (const auto h : hits) out.hits += h;
  out.trials = trials;
  out.seed = seed;
  out.generator = std::string(kGeneratorName);
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.half_width = 1.96 * std::sqrt(out.estimate * (1 - out.estimate) / static_cast<double>(trials));
  return out;
}

}  // namespace spinsync::sp
