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

#include "spinsync/enumeration.hpp"
#include "spinsync/mutual_info.hpp"
#include "spinsync/random_models.hpp"
#include "spinsync/sdpi.hpp"
#include "spinsync/sp_collapse.hpp"
#include "spinsync/sp_tree.hpp"
#include "spinsync/tied_tree.hpp"

namespace {

using namespace spinsync;

SyncModel tied_bsc_tree(std::size_t depth) {
  return sp::tied_tree_build(bsc_model(regular_tree(2, depth), Rational(1, 10)), 0);
}

std::vector<std::size_t> every_edge(const SyncModel& m) { return all_edges(m); }

void BM_ExactStream(benchmark::State& state) {
  const SyncModel m = tied_bsc_tree(static_cast<std::size_t>(state.range(0)));
  info::EnumerationOptions options;
  options.strategy = info::EnumerationStrategy::Stream;
  options.want_kl = false;
  const auto [u, v] = *m.graph().terminals();
  const auto observed = every_edge(m);
  for (auto _ : state) benchmark::DoNotOptimize(info::exact_i2_conditional(m, u, v, observed, options));
}
BENCHMARK(BM_ExactStream)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_ExactEliminate(benchmark::State& state) {
  const SyncModel m = tied_bsc_tree(static_cast<std::size_t>(state.range(0)));
  info::EnumerationOptions options;
  options.strategy = info::EnumerationStrategy::Eliminate;
  options.want_kl = false;
  const auto [u, v] = *m.graph().terminals();
  const auto observed = every_edge(m);
  for (auto _ : state) benchmark::DoNotOptimize(info::exact_i2_conditional(m, u, v, observed, options));
}
BENCHMARK(BM_ExactEliminate)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Collapse(benchmark::State& state) {
  const SyncModel m = tied_bsc_tree(static_cast<std::size_t>(state.range(0)));
  const sp::SPTree tree = *sp::sp_recognize(m.graph());
  for (auto _ : state) benchmark::DoNotOptimize(info::edge_i2(sp::sp_collapse_to_channel(m, tree)));
}
BENCHMARK(BM_Collapse)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Sdpi(benchmark::State& state) {
  CounterRng rng(3, 0);
  const Channel q = gen::random_channel(rng, 4);
  for (auto _ : state) benchmark::DoNotOptimize(info::sdpi_chi2(q));
}
BENCHMARK(BM_Sdpi)->Unit(benchmark::kMicrosecond);

}  // namespace
