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

#include "spinsync/random_models.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spinsync::gen {

namespace {

std::vector<Rational> normalized(std::vector<long> weights, CounterRng& rng) {
  long total = std::accumulate(weights.begin(), weights.end(), 0L);
  if (total == 0) {
    weights[rng.below(weights.size())] = 1;
    total = 1;
  }
  std::vector<Rational> row;
  row.reserve(weights.size());
  for (const long w : weights) row.emplace_back(w, total);
  return row;
}

std::vector<std::string> symbols(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

}  // namespace

Channel random_channel(CounterRng& rng, std::size_t max_alphabet, const GroupSpec& group) {
  const std::size_t size = 2 + rng.below(std::max<std::size_t>(max_alphabet, 2) - 1);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t g = 0; g < group.order(); ++g) {
    std::vector<long> weights(size);
    for (auto& w : weights) w = rng.between(0, 64);
    rows.push_back(normalized(std::move(weights), rng));
  }
  return Channel(symbols(size), std::move(rows));
}

Channel random_symmetric_channel(CounterRng& rng, std::size_t max_alphabet) {
  const std::size_t size = 2 + rng.below(std::max<std::size_t>(max_alphabet, 2) - 1);
  const std::size_t pairs = 1 + rng.below(size / 2);
  std::vector<std::size_t> partner(size);
  std::iota(partner.begin(), partner.end(), 0);
  for (std::size_t p = 0; p < pairs; ++p) {
    partner[2 * p] = 2 * p + 1;
    partner[2 * p + 1] = 2 * p;
  }
  std::vector<long> weights(size);
  for (auto& w : weights) w = rng.between(0, 64);
  const std::vector<Rational> plus = normalized(std::move(weights), rng);
  std::vector<Rational> minus(size);
  for (std::size_t y = 0; y < size; ++y) minus[y] = plus[partner[y]];
  return Channel(symbols(size), {plus, minus});
}

Channel random_bsc(CounterRng& rng) { return make_bsc(Rational(rng.between(0, 32), 64)); }

Rational random_fraction(CounterRng& rng, long lo, long hi, long den) { return Rational(rng.between(lo, hi), den); }

MultiGraph random_sp_graph(CounterRng& rng, std::size_t edges) {
  MultiGraph g;
  const std::size_t u = g.add_vertex("u");
  const std::size_t v = g.add_vertex("v");
  g.add_edge("e1", u, v);
  std::size_t next_vertex = 1;
  while (g.edge_count() < std::max<std::size_t>(edges, 1)) {
    const Edge picked = g.edge(rng.below(g.edge_count()));
    const std::string id = "e" + std::to_string(g.edge_count() + 1);
    if (rng.coin()) {
      g.add_edge(id, picked.u, picked.v);
    } else {
      // Series step: the picked edge is redirected to a fresh w and w joins its old end.
      const std::size_t w = g.add_vertex("w" + std::to_string(next_vertex++));
      std::vector<std::string> names = g.vertex_names();
      std::vector<MultiGraph::EdgeSpec> specs;
      for (const Edge& e : g.edges()) {
        if (e.id == picked.id) {
          specs.push_back({e.id, names[e.u], names[w]});
        } else {
          specs.push_back({e.id, names[e.u], names[e.v]});
        }
      }
      specs.push_back({id, names[w], names[picked.v]});
      g = MultiGraph(names, specs);
    }
  }
  return g.with_terminals(u, v);
}

MultiGraph random_tree(CounterRng& rng, std::size_t vertices) {
  MultiGraph g;
  g.add_vertex("t0");
  for (std::size_t i = 1; i < std::max<std::size_t>(vertices, 1); ++i) {
    const std::size_t parent = rng.below(i);
    const std::size_t child = g.add_vertex("t" + std::to_string(i));
    g.add_edge("e" + std::to_string(i), parent, child);
  }
  return g;
}

MultiGraph random_connected_graph(CounterRng& rng, std::size_t vertices, std::size_t edges) {
  MultiGraph g = random_tree(rng, vertices);
  while (g.edge_count() < edges && vertices >= 2) {
    const std::size_t a = rng.below(vertices);
    std::size_t b = rng.below(vertices - 1);
    if (b >= a) ++b;
    g.add_edge("e" + std::to_string(g.edge_count() + 1), a, b);
  }
  return g;
}

MultiGraph complete_graph_k4() {
  return MultiGraph({"a", "b", "c", "d"}, {{"e1", "a", "b"},
                                           {"e2", "a", "c"},
                                           {"e3", "a", "d"},
                                           {"e4", "b", "c"},
                                           {"e5", "b", "d"},
                                           {"e6", "c", "d"}});
}

MultiGraph random_k4_subdivision(CounterRng& rng, std::size_t max_extra) {
  const MultiGraph k4 = complete_graph_k4();
  std::vector<std::size_t> splits(k4.edge_count(), 0);
  const std::size_t extra = rng.below(max_extra + 1);
  for (std::size_t i = 0; i < extra; ++i) ++splits[rng.below(splits.size())];

  MultiGraph g;
  for (const auto& name : k4.vertex_names()) g.add_vertex(name);
  std::size_t next_vertex = 1;
  for (std::size_t e = 0; e < k4.edge_count(); ++e) {
    std::size_t prev = k4.edge(e).u;
    for (std::size_t s = 0; s < splits[e]; ++s) {
      const std::size_t mid = g.add_vertex("s" + std::to_string(next_vertex++));
      g.add_edge("e" + std::to_string(g.edge_count() + 1), prev, mid);
      prev = mid;
    }
    g.add_edge("e" + std::to_string(g.edge_count() + 1), prev, k4.edge(e).v);
  }
  const std::size_t copies = rng.below(3);
  for (std::size_t i = 0; i < copies; ++i) {
    const Edge picked = g.edge(rng.below(g.edge_count()));
    g.add_edge("e" + std::to_string(g.edge_count() + 1), picked.u, picked.v);
  }
  const std::size_t a = rng.below(g.vertex_count());
  std::size_t b = rng.below(g.vertex_count() - 1);
  if (b >= a) ++b;
  return g.with_terminals(a, b);
}

SyncModel random_model(CounterRng& rng, const MultiGraph& graph, ChannelKind kind, std::size_t max_alphabet) {
  std::vector<Channel> channels;
  channels.reserve(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    switch (kind) {
      case ChannelKind::General:
        channels.push_back(random_channel(rng, max_alphabet));
        break;
      case ChannelKind::Symmetric:
        channels.push_back(random_symmetric_channel(rng, max_alphabet));
        break;
      case ChannelKind::Bsc:
        channels.push_back(random_bsc(rng));
        break;
    }
  }
  return SyncModel(graph, std::move(channels));
}

}  // namespace spinsync::gen
