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

#include "spinsync/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include <quadmath.h>

#include "spinsync/channel.hpp"
#include "spinsync/errors.hpp"
#include "spinsync/f_divergence.hpp"

namespace spinsync::info {

namespace {

using u128 = unsigned __int128;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) {
    return UINT64_MAX;
  }
  return a * b;
}

// Integer form of one observed edge: num[y][g] / denominator = Q(y | g).
struct IntChannel {
  std::size_t a = 0;  // local endpoint with X_a - X_b as channel input
  std::size_t b = 0;
  mpz_class denominator;
  std::vector<std::vector<mpz_class>> num;
};

// The reduced problem: local vertices 0 (= u) .. m-1, with v at index 1.
struct Reduced {
  bool trivial = false;  // u and v not joined by informative observations
  std::size_t k = 2;
  std::size_t m = 0;
  bool uniform = true;
  std::vector<IntChannel> edges;
  std::vector<mpz_class> prior_num;  // P[X = 0] numerator per local vertex
  std::vector<mpz_class> prior_den;
  std::uint64_t configs = 0;
  std::uint64_t states = 0;
};

Reduced reduce(const SyncModel& model, std::size_t u, std::size_t v, std::span<const std::size_t> observed,
               const EnumerationOptions& options) {
  const MultiGraph& g = model.graph();
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw InvalidInput("vertex index out of range");
  }
  if (u == v) {
    throw InvalidInput("conditional information needs two distinct vertices");
  }
  std::vector<std::size_t> edges(observed.begin(), observed.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Channel> channels;
  std::vector<std::size_t> kept;
  for (const std::size_t e : edges) {
    if (e >= g.edge_count()) {
      throw InvalidInput("observed edge index out of range");
    }
    Channel ch = options.merge_outputs ? merge_equivalent_outputs(model.channel(e)) : model.channel(e);
    if (ch.output_size() == 1 || ch.is_independent()) {
      continue;
    }
    kept.push_back(e);
    channels.push_back(std::move(ch));
  }

  Reduced r;
  r.k = model.group().order();
  r.uniform = model.has_uniform_prior();

  DisjointSets sets(g.vertex_count());
  for (const std::size_t e : kept) sets.unite(g.edge(e).u, g.edge(e).v);
  if (sets.find(u) != sets.find(v)) {
    r.trivial = true;
    return r;
  }
  std::vector<std::size_t> local(g.vertex_count(), SIZE_MAX);
  local[u] = 0;
  local[v] = 1;
  r.m = 2;
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (local[w] == SIZE_MAX && sets.find(w) == sets.find(u)) local[w] = r.m++;
  }
  std::vector<std::size_t> global(r.m);
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (local[w] != SIZE_MAX) global[local[w]] = w;
  }

  for (std::size_t i = 0; i < kept.size(); ++i) {
    const Edge& edge = g.edge(kept[i]);
    if (local[edge.u] == SIZE_MAX) continue;
    const Channel& ch = channels[i];
    IntChannel ic;
    ic.a = local[edge.u];
    ic.b = local[edge.v];
    ic.denominator = 1;
    for (std::size_t gi = 0; gi < ch.input_size(); ++gi) {
      for (const Rational& p : ch.row(gi)) {
        mpz_lcm(ic.denominator.get_mpz_t(), ic.denominator.get_mpz_t(), p.value().get_den_mpz_t());
      }
    }
    ic.num.assign(ch.output_size(), std::vector<mpz_class>(r.k));
    for (std::size_t y = 0; y < ch.output_size(); ++y) {
      for (std::size_t gi = 0; gi < r.k; ++gi) {
        const mpq_class& p = ch.prob(gi, y).value();
        ic.num[y][gi] = p.get_num() * (ic.denominator / p.get_den());
      }
    }
    r.edges.push_back(std::move(ic));
  }

  if (!r.uniform) {
    for (std::size_t i = 0; i < r.m; ++i) {
      const Rational p = model.prior_plus(global[i]);
      r.prior_num.push_back(p.numerator());
      r.prior_den.push_back(p.denominator());
    }
  }

  std::uint64_t configs = 1;
  for (std::size_t i = r.uniform ? 1 : 0; i < r.m; ++i) configs = saturating_mul(configs, r.k);
  r.configs = configs;
  r.states = configs;
  for (const auto& e : r.edges) r.states = saturating_mul(r.states, e.num.size());
  return r;
}

template <class W>
W to_weight(const mpz_class& z) {
  if constexpr (std::is_same_v<W, mpz_class>) {
    return z;
  } else if constexpr (std::is_same_v<W, std::uint64_t>) {
    return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t()));
  } else {
    const mpz_class hi = z >> 64;
    const mpz_class lo = z - (hi << 64);
    return (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) | static_cast<u128>(mpz_get_ui(lo.get_mpz_t()));
  }
}

template <class W>
mpz_class to_mpz(const W& w) {
  if constexpr (std::is_same_v<W, mpz_class>) {
    return w;
  } else if constexpr (std::is_same_v<W, std::uint64_t>) {
    mpz_class z;
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(w));
    return z;
  } else {
    mpz_class hi;
    mpz_class lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(static_cast<std::uint64_t>(w >> 64)));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(static_cast<std::uint64_t>(w)));
    return (hi << 64) + lo;
  }
}

template <class W>
bool is_nonzero(const W& w) {
  if constexpr (std::is_same_v<W, mpz_class>) {
    return sgn(w) != 0;
  } else {
    return w != 0;
  }
}

struct ChunkResult {
  RationalSum chi2;
  KlBits::Float kl = 0;
  std::uint64_t outcomes = 0;
};

// Contribution of one outcome under a uniform prior, from c_h = weight of
// X_v - X_u = h. Homogeneous of degree one in c, so a merged class of outcomes
// contributes `mult` times its normalized representative.
void add_uniform_term(const std::vector<mpz_class>& c, std::size_t k, const mpz_class& mult, bool want_kl,
                      ChunkResult& out) {
  mpz_class s = 0;
  for (const auto& x : c) s += x;
  if (sgn(s) == 0) return;
  mpz_class numerator = 0;
  if (k == 2) {
    const mpz_class d = c[0] - c[1];
    numerator = 2 * d * d;
  } else {
    for (std::size_t h = 0; h < k; ++h) {
      const mpz_class d = static_cast<unsigned long>(k) * c[h] - s;
      numerator += d * d;
    }
  }
  out.chi2.add(numerator * mult, s);
  if (want_kl) {
    const KlBits::Float sh = to_hp(s);
    KlBits::Float term = 0;
    for (std::size_t h = 0; h < k; ++h) {
      if (sgn(c[h]) == 0) continue;
      const KlBits::Float ch = to_hp(c[h]);
      term += ch * log2q(static_cast<KlBits::Float>(k) * ch / sh);
    }
    out.kl += term * to_hp(mult);
  }
}

// Contribution of one outcome from the unnormalized k x k joint of (X_u, X_v).
void add_general_term(const std::vector<mpz_class>& joint, std::size_t k, const mpz_class& mult, bool want_kl,
                      ChunkResult& out) {
  std::vector<mpz_class> row(k);
  std::vector<mpz_class> col(k);
  mpz_class total = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      row[a] += joint[a * k + b];
      col[b] += joint[a * k + b];
    }
  }
  for (std::size_t a = 0; a < k; ++a) total += row[a];
  if (sgn(total) == 0) return;
  KlBits::Float kl = 0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (sgn(row[a]) == 0 || sgn(col[b]) == 0) continue;
      const mpz_class rc = row[a] * col[b];
      const mpz_class d = joint[a * k + b] * total - rc;
      out.chi2.add(d * d * mult, total * rc);
      if (want_kl && sgn(joint[a * k + b]) != 0) {
        const mpq_class ratio(joint[a * k + b] * total, rc);
        kl += to_hp(joint[a * k + b]) * log2q(to_hp(ratio));
      }
    }
  }
  out.kl += kl * to_hp(mult);
}

const mpz_class kOne = 1;

template <class W>
class Engine {
 public:
  Engine(const Reduced& r, bool want_kl) : r_(r), want_kl_(want_kl) {
    const std::size_t free_from = r.uniform ? 1 : 0;
    const std::size_t n = static_cast<std::size_t>(r.configs);
    xu_.assign(n, 0);
    xv_.assign(n, 0);
    diff_.assign(r.edges.size(), std::vector<std::uint32_t>(n));
    std::vector<std::size_t> x(r.m, 0);
    initial_.assign(n, W(1));
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t rest = c;
      for (std::size_t i = r.m; i-- > free_from;) {
        x[i] = rest % r.k;
        rest /= r.k;
      }
      xu_[c] = static_cast<std::uint32_t>(x[0]);
      xv_[c] = static_cast<std::uint32_t>(x[1]);
      for (std::size_t e = 0; e < r.edges.size(); ++e) {
        diff_[e][c] = static_cast<std::uint32_t>((x[r.edges[e].a] + r.k - x[r.edges[e].b]) % r.k);
      }
      if (!r.uniform) {
        mpz_class w = 1;
        for (std::size_t i = 0; i < r.m; ++i) {
          w *= x[i] == 0 ? r.prior_num[i] : r.prior_den[i] - r.prior_num[i];
        }
        initial_[c] = to_weight<W>(w);
      }
    }
    num_.resize(r.edges.size());
    for (std::size_t e = 0; e < r.edges.size(); ++e) {
      for (const auto& column : r.edges[e].num) {
        std::vector<W> row;
        for (const auto& z : column) row.push_back(to_weight<W>(z));
        num_[e].push_back(std::move(row));
      }
    }
  }

  void run_chunk(std::span<const std::size_t> prefix, ChunkResult& out) const {
    std::vector<std::vector<W>> levels(r_.edges.size() + 1);
    levels[0] = initial_;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      if (!multiply(levels[d], d, prefix[d], levels[d + 1])) return;
    }
    descend(levels, prefix.size(), out);
  }

 private:
  bool multiply(const std::vector<W>& in, std::size_t e, std::size_t y, std::vector<W>& out) const {
    const auto& factors = num_[e][y];
    const auto& diff = diff_[e];
    out.resize(in.size());
    bool any = false;
    for (std::size_t c = 0; c < in.size(); ++c) {
      if (is_nonzero(in[c])) {
        out[c] = in[c] * factors[diff[c]];
        any = any || is_nonzero(out[c]);
      } else {
        out[c] = W(0);
      }
    }
    return any;
  }

  void descend(std::vector<std::vector<W>>& levels, std::size_t d, ChunkResult& out) const {
    if (d == r_.edges.size()) {
      leaf(levels[d], out);
      return;
    }
    for (std::size_t y = 0; y < num_[d].size(); ++y) {
      if (multiply(levels[d], d, y, levels[d + 1])) descend(levels, d + 1, out);
    }
  }

  void leaf(const std::vector<W>& w, ChunkResult& out) const {
    ++out.outcomes;
    const std::size_t k = r_.k;
    if (r_.uniform) {
      std::vector<W> c(k, W(0));
      for (std::size_t i = 0; i < w.size(); ++i) c[xv_[i]] += w[i];
      std::vector<mpz_class> cz(k);
      for (std::size_t h = 0; h < k; ++h) cz[h] = to_mpz(c[h]);
      add_uniform_term(cz, k, kOne, want_kl_, out);
      return;
    }
    std::vector<W> joint(k * k, W(0));
    for (std::size_t i = 0; i < w.size(); ++i) joint[xu_[i] * k + xv_[i]] += w[i];
    std::vector<mpz_class> jz(k * k);
    for (std::size_t i = 0; i < k * k; ++i) jz[i] = to_mpz(joint[i]);
    add_general_term(jz, k, kOne, want_kl_, out);
  }

  const Reduced& r_;
  bool want_kl_;
  std::vector<std::uint32_t> xu_;
  std::vector<std::uint32_t> xv_;
  std::vector<std::vector<std::uint32_t>> diff_;
  std::vector<W> initial_;
  std::vector<std::vector<std::vector<W>>> num_;  // [edge][y][g]
};

std::size_t bit_bound(const Reduced& r) {
  std::size_t bits = 0;
  for (const auto& e : r.edges) {
    mpz_class mx = 0;
    for (const auto& column : e.num) {
      for (const auto& z : column) mx = std::max(mx, z);
    }
    bits += mpz_sizeinbase(mx.get_mpz_t(), 2);
  }
  if (!r.uniform) {
    for (const auto& d : r.prior_den) bits += mpz_sizeinbase(d.get_mpz_t(), 2);
  }
  std::uint64_t c = r.configs;
  while (c > 0) {
    ++bits;
    c >>= 1;
  }
  return bits + 1;
}

void finish(const Reduced& r, const RationalSum& chi2, KlBits::Float kl, ConditionalInfo& info) {
  mpz_class scale = 1;
  for (const auto& e : r.edges) scale *= e.denominator;
  if (r.uniform) {
    for (std::size_t i = 0; i < r.m; ++i) scale *= static_cast<unsigned long>(r.k);
    kl *= static_cast<KlBits::Float>(r.k);
  } else {
    for (const auto& d : r.prior_den) scale *= d;
  }
  info.chi2 = chi2.total() / Rational(scale, mpz_class(1));
  info.kl = KlBits(kl / to_hp(scale));
}

template <class W>
ConditionalInfo run_engine(const Reduced& r, const EnumerationOptions& options) {
  const Engine<W> engine(r, options.want_kl);

  // Fixed chunking by prefix outcome keeps the combination order independent of `jobs`.
  std::size_t depth = 0;
  std::size_t chunks = 1;
  while (depth < r.edges.size() && chunks < 256) {
    chunks *= r.edges[depth].num.size();
    ++depth;
  }
  std::vector<ChunkResult> results(chunks);
  auto prefix_of = [&](std::size_t index) {
    std::vector<std::size_t> prefix(depth);
    for (std::size_t d = depth; d-- > 0;) {
      prefix[d] = index % r.edges[d].num.size();
      index /= r.edges[d].num.size();
    }
    return prefix;
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(chunks)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < chunks; ++i) engine.run_chunk(prefix_of(i), results[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < chunks; i = next++) engine.run_chunk(prefix_of(i), results[i]);
      });
    }
  }

  RationalSum chi2;
  KlBits::Float kl = 0;
  ConditionalInfo info;
  for (auto& chunk : results) {
    chi2.add(chunk.chi2);
    kl += chunk.kl;
    info.outcomes += chunk.outcomes;
  }

  finish(r, chi2, kl, info);
  info.states = r.states;
  return info;
}

// Vertex elimination over a frontier of live vertices. Each state is a
// gcd-normalized vector of joint weights over the frontier spins for one class
// of outcome prefixes; `mult` carries the class's total scale.
class Eliminator {
 public:
  Eliminator(const Reduced& r, const EnumerationOptions& options) : r_(r), options_(options) {
    incident_.resize(r.m);
    for (std::size_t e = 0; e < r.edges.size(); ++e) {
      incident_[r.edges[e].a].push_back(e);
      incident_[r.edges[e].b].push_back(e);
    }
    done_.assign(r.edges.size(), false);
    in_frontier_.assign(r.m, false);
    states_.emplace(std::vector<mpz_class>{1}, mpz_class(1));
  }

  ConditionalInfo run() {
    add_vertex(0);
    add_vertex(1);
    std::vector<std::set<std::size_t>> adjacency(r_.m);
    for (const auto& e : r_.edges) {
      adjacency[e.a].insert(e.b);
      adjacency[e.b].insert(e.a);
    }
    std::set<std::size_t> remaining;
    for (std::size_t x = 2; x < r_.m; ++x) remaining.insert(x);
    while (!remaining.empty()) {
      std::size_t best = *remaining.begin();
      for (const std::size_t x : remaining) {
        if (adjacency[x].size() < adjacency[best].size()) best = x;
      }
      for (const std::size_t e : incident_[best]) {
        if (!done_[e]) apply_edge(e);
      }
      eliminate(best);
      remaining.erase(best);
      const std::vector<std::size_t> around(adjacency[best].begin(), adjacency[best].end());
      for (const std::size_t a : around) {
        adjacency[a].erase(best);
        for (const std::size_t b : around) {
          if (a != b) adjacency[a].insert(b);
        }
      }
    }
    for (std::size_t e = 0; e < r_.edges.size(); ++e) {
      if (!done_[e]) apply_edge(e);
    }

    ChunkResult out;
    for (const auto& [vec, mult] : states_) {
      ++out.outcomes;
      if (r_.uniform) {
        add_uniform_term(vec, r_.k, mult, options_.want_kl, out);
      } else {
        add_general_term(vec, r_.k, mult, options_.want_kl, out);
      }
    }
    ConditionalInfo info;
    finish(r_, out.chi2, out.kl, info);
    info.outcomes = out.outcomes;
    info.states = peak_;
    return info;
  }

 private:
  using StateMap = std::map<std::vector<mpz_class>, mpz_class>;

  std::size_t radix(std::size_t x) const { return r_.uniform && x == 0 ? 1 : r_.k; }

  std::size_t configs() const {
    std::size_t n = 1;
    for (const std::size_t x : frontier_) n *= radix(x);
    return n;
  }

  // Digit of frontier position `pos` in configuration `c`.
  std::size_t digit(std::size_t c, std::size_t pos) const {
    for (std::size_t i = frontier_.size(); i-- > pos + 1;) c /= radix(frontier_[i]);
    return c % radix(frontier_[pos]);
  }

  std::size_t position(std::size_t x) const {
    return static_cast<std::size_t>(std::find(frontier_.begin(), frontier_.end(), x) - frontier_.begin());
  }

  void insert(StateMap& into, std::vector<mpz_class> vec, const mpz_class& mult) {
    mpz_class g = 0;
    for (const auto& x : vec) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sgn(g) == 0) return;
    if (g != 1) {
      for (auto& x : vec) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    auto [it, inserted] = into.try_emplace(std::move(vec), 0);
    it->second += mult * g;
  }

  void commit(StateMap next) {
    states_ = std::move(next);
    const std::uint64_t live = saturating_mul(states_.size(), configs());
    peak_ = std::max(peak_, live);
    if (live > options_.state_budget) {
      throw BudgetExceeded("exact elimination holds " + std::to_string(live) + " live entries, budget is " +
                           std::to_string(options_.state_budget) +
                           "; for series-parallel models try --mode collapsed");
    }
  }

  void add_vertex(std::size_t x) {
    if (in_frontier_[x]) return;
    in_frontier_[x] = true;
    frontier_.push_back(x);
    const std::size_t rad = radix(x);
    StateMap next;
    for (const auto& [vec, mult] : states_) {
      std::vector<mpz_class> grown(vec.size() * rad);
      for (std::size_t c = 0; c < vec.size(); ++c) {
        for (std::size_t s = 0; s < rad; ++s) {
          if (r_.uniform) {
            grown[c * rad + s] = vec[c];
          } else {
            grown[c * rad + s] = vec[c] * (s == 0 ? r_.prior_num[x] : r_.prior_den[x] - r_.prior_num[x]);
          }
        }
      }
      insert(next, std::move(grown), mult);
    }
    commit(std::move(next));
  }

  void apply_edge(std::size_t e) {
    const IntChannel& ch = r_.edges[e];
    add_vertex(ch.a);
    add_vertex(ch.b);
    done_[e] = true;
    const std::size_t pa = position(ch.a);
    const std::size_t pb = position(ch.b);
    const std::size_t n = configs();
    std::vector<std::size_t> diff(n);
    for (std::size_t c = 0; c < n; ++c) diff[c] = (digit(c, pa) + r_.k - digit(c, pb)) % r_.k;
    StateMap next;
    for (const auto& [vec, mult] : states_) {
      for (const auto& column : ch.num) {
        std::vector<mpz_class> out(n);
        for (std::size_t c = 0; c < n; ++c) {
          if (sgn(vec[c]) != 0) out[c] = vec[c] * column[diff[c]];
        }
        insert(next, std::move(out), mult);
      }
    }
    commit(std::move(next));
  }

  void eliminate(std::size_t x) {
    if (!in_frontier_[x]) return;
    const std::size_t pos = position(x);
    const std::size_t rad = radix(x);
    std::size_t inner = 1;
    for (std::size_t i = pos + 1; i < frontier_.size(); ++i) inner *= radix(frontier_[i]);
    const std::size_t n = configs();
    StateMap next;
    for (const auto& [vec, mult] : states_) {
      std::vector<mpz_class> out(n / rad);
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t outer = c / (inner * rad);
        out[outer * inner + c % inner] += vec[c];
      }
      insert(next, std::move(out), mult);
    }
    frontier_.erase(frontier_.begin() + static_cast<long>(pos));
    in_frontier_[x] = false;
    commit(std::move(next));
  }

  const Reduced& r_;
  const EnumerationOptions& options_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<bool> done_;
  std::vector<bool> in_frontier_;
  std::vector<std::size_t> frontier_;
  StateMap states_;
  std::uint64_t peak_ = 0;
};

}  // namespace

ConditionalInfo exact_conditional_info(const SyncModel& model, std::size_t u, std::size_t v,
                                       std::span<const std::size_t> observed, const EnumerationOptions& options) {
  const Reduced r = reduce(model, u, v, observed, options);
  if (r.trivial) {
    return ConditionalInfo{};
  }
  const bool stream = options.strategy == EnumerationStrategy::Stream ||
                      (options.strategy == EnumerationStrategy::Auto && r.states <= options.state_budget);
  if (!stream) {
    return Eliminator(r, options).run();
  }
  if (r.states > options.state_budget) {
    throw BudgetExceeded("exact enumeration needs " +
                         (r.states == UINT64_MAX ? std::string("more than 2^64") : std::to_string(r.states)) +
                         " states, budget is " + std::to_string(options.state_budget) +
                         "; for series-parallel models try --mode collapsed");
  }
  const std::size_t bits = bit_bound(r);
  if (bits <= 63) return run_engine<std::uint64_t>(r, options);
  if (bits <= 127) return run_engine<u128>(r, options);
  return run_engine<mpz_class>(r, options);
}

Rational exact_i2_conditional(const SyncModel& model, std::size_t u, std::size_t v,
                              std::span<const std::size_t> observed, const EnumerationOptions& options) {
  EnumerationOptions o = options;
  o.want_kl = false;
  return exact_conditional_info(model, u, v, observed, o).chi2;
}

KlBits exact_ikl_conditional(const SyncModel& model, std::size_t u, std::size_t v,
                             std::span<const std::size_t> observed, const EnumerationOptions& options) {
  EnumerationOptions o = options;
  o.want_kl = true;
  return exact_conditional_info(model, u, v, observed, o).kl;
}

std::uint64_t enumeration_states(const SyncModel& model, std::size_t u, std::size_t v,
                                 std::span<const std::size_t> observed, const EnumerationOptions& options) {
  const Reduced r = reduce(model, u, v, observed, options);
  return r.trivial ? 0 : r.states;
}

SandwichReport sandwich_check(const SyncModel& model, std::size_t u, std::size_t v,
                              std::span<const std::size_t> observed, const EnumerationOptions& options) {
  model.require_uniform_binary("the KL/chi-squared sandwich");
  EnumerationOptions o = options;
  o.want_kl = true;
  const ConditionalInfo info = exact_conditional_info(model, u, v, observed, o);
  const KlBits::Float i2 = to_hp(info.chi2.value());
  const KlBits::Float slack = 1e-24Q;
  SandwichReport report;
  report.i2 = info.chi2;
  report.ikl = info.kl;
  report.lower_holds = i2 / 2 <= info.kl.value() + slack;
  report.upper_holds = info.kl.value() <= i2 + slack;
  return report;
}

}  // namespace spinsync::info
