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

#include <benchmark/benchmark.h>

#include "spinsync/paths.hpp"
#include "spinsync/percolation.hpp"
#include "spinsync/random_models.hpp"
#include "spinsync/sp_tree.hpp"

namespace {

using namespace spinsync;

MultiGraph sp_graph(std::size_t edges) {
  CounterRng rng(9, edges);
  return gen::random_sp_graph(rng, edges);
}

void BM_Recognize(benchmark::State& state) {
  const MultiGraph g = sp_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sp::sp_recognize(g));
}
BENCHMARK(BM_Recognize)->RangeMultiplier(4)->Range(16, 1024);

void BM_ReliabilitySp(benchmark::State& state) {
  const MultiGraph g = sp_graph(static_cast<std::size_t>(state.range(0)));
  const sp::SPTree tree = *sp::sp_recognize(g);
  const std::vector<Rational> gamma(g.edge_count(), Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(sp::conn_sp_reliability(tree, gamma));
}
BENCHMARK(BM_ReliabilitySp)->RangeMultiplier(2)->Range(8, 64);

void BM_ReliabilitySubsets(benchmark::State& state) {
  const MultiGraph g = sp_graph(static_cast<std::size_t>(state.range(0)));
  const std::vector<Rational> gamma(g.edge_count(), Rational(1, 3));
  const std::vector<std::size_t> target{g.terminals()->second};
  for (auto _ : state) benchmark::DoNotOptimize(sp::conn_exact_subsets(g, gamma, g.terminals()->first, target));
}
BENCHMARK(BM_ReliabilitySubsets)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_Paths(benchmark::State& state) {
  const MultiGraph g = sp_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sp::count_paths(g, g.terminals()->first, g.terminals()->second));
}
BENCHMARK(BM_Paths)->RangeMultiplier(2)->Range(8, 32);

void BM_MonteCarlo(benchmark::State& state) {
  CounterRng rng(10, 0);
  const MultiGraph g = gen::random_connected_graph(rng, 12, 24);
  const std::vector<double> gamma(g.edge_count(), 0.3);
  const std::vector<std::size_t> target{11};
  const unsigned jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sp::conn_monte_carlo(g, gamma, 0, target, 100000, 1, jobs));
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
