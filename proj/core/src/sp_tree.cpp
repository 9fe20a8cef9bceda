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

#include "spinsync/sp_tree.hpp"

#include <map>
#include <set>

#include "spinsync/errors.hpp"

namespace spinsync::sp {

namespace {

// Node before orientation: endpoints known as an unordered pair {a, b}.
struct RawNode {
  NodeKind kind = NodeKind::Leaf;
  std::size_t edge = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t middle = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

bool same_ends(const RawNode& n, std::size_t s, std::size_t t) {
  return (n.a == s && n.b == t) || (n.a == t && n.b == s);
}

// Assigns (source, sink) top-down from the root, swapping series children
// where needed so that left.sink = middle = right.source.
std::vector<SPNode> orient(std::vector<RawNode> raw, std::size_t s, std::size_t t) {
  if (raw.empty() || !same_ends(raw.back(), s, t)) {
    throw InvalidInput("decomposition does not connect the terminal pair");
  }
  std::vector<SPNode> nodes(raw.size());
  std::vector<std::pair<std::size_t, std::size_t>> ends(raw.size());
  ends.back() = {s, t};
  for (std::size_t i = raw.size(); i-- > 0;) {
    RawNode& r = raw[i];
    const auto [src, dst] = ends[i];
    SPNode& n = nodes[i];
    n.kind = r.kind;
    n.edge = r.edge;
    n.source = src;
    n.sink = dst;
    if (r.kind == NodeKind::Leaf) continue;
    if (r.left >= i || r.right >= i) {
      throw InvalidInput("decomposition children must precede their parent");
    }
    if (r.kind == NodeKind::Parallel) {
      if (!same_ends(raw[r.left], src, dst) || !same_ends(raw[r.right], src, dst)) {
        throw InvalidInput("parallel branches do not share terminals");
      }
      ends[r.left] = ends[r.right] = {src, dst};
    } else {
      if (!same_ends(raw[r.left], src, r.middle)) std::swap(r.left, r.right);
      if (!same_ends(raw[r.left], src, r.middle) || !same_ends(raw[r.right], r.middle, dst)) {
        throw InvalidInput("series parts do not meet at the middle vertex");
      }
      ends[r.left] = {src, r.middle};
      ends[r.right] = {r.middle, dst};
      n.middle = r.middle;
    }
    n.left = r.left;
    n.right = r.right;
  }
  return nodes;
}

std::vector<std::string> edge_id_list(const MultiGraph& g) {
  std::vector<std::string> ids;
  ids.reserve(g.edge_count());
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  return ids;
}

class Reducer {
 public:
  Reducer(const MultiGraph& g, std::size_t u, std::size_t v)
      : u_(u), v_(v), degree_(g.vertex_count(), 0), incident_(g.vertex_count()) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      raw_.push_back({NodeKind::Leaf, e, 0, 0, 0, g.edge(e).u, g.edge(e).v});
      add(e, e);
    }
  }

  std::optional<std::vector<RawNode>> run() {
    for (;;) {
      if (!parallel_ready_.empty()) {
        const auto [first, key] = *parallel_ready_.begin();
        const auto& group = by_ends_[key];
        const std::size_t second = *std::next(group.begin());
        const std::size_t merged = raw_.size();
        raw_.push_back({NodeKind::Parallel, 0, pos_[first].node, pos_[second].node, 0, pos_[first].a, pos_[first].b});
        remove(second);
        pos_[first].node = merged;
        continue;
      }
      if (!series_ready_.empty()) {
        const std::size_t w = *series_ready_.begin();
        const std::size_t p = *incident_[w].begin();
        const std::size_t q = *std::next(incident_[w].begin());
        const std::size_t a = pos_[p].a == w ? pos_[p].b : pos_[p].a;
        const std::size_t b = pos_[q].a == w ? pos_[q].b : pos_[q].a;
        const std::size_t node = raw_.size();
        raw_.push_back({NodeKind::Series, 0, pos_[p].node, pos_[q].node, w, a, b});
        remove(p);
        remove(q);
        add(pos_.size(), node);
        continue;
      }
      break;
    }
    if (alive_ != 1) return std::nullopt;
    for (const auto& slot : pos_) {
      if (slot.alive && same_ends(raw_[slot.node], u_, v_) && slot.node == raw_.size() - 1) return raw_;
    }
    return std::nullopt;
  }

 private:
  struct Slot {
    std::size_t a;
    std::size_t b;
    std::size_t node;
    bool alive;
  };
  using Key = std::pair<std::size_t, std::size_t>;

  static Key key_of(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

  void refresh_parallel(const Key& key, std::optional<std::size_t> old_first) {
    if (old_first) parallel_ready_.erase({*old_first, key});
    const auto& group = by_ends_[key];
    if (group.size() >= 2) parallel_ready_.insert({*group.begin(), key});
  }

  std::optional<std::size_t> current_first(const Key& key) {
    const auto it = by_ends_.find(key);
    if (it == by_ends_.end() || it->second.size() < 2) return std::nullopt;
    return *it->second.begin();
  }

  void refresh_series(std::size_t w) {
    if (w != u_ && w != v_ && degree_[w] == 2) {
      series_ready_.insert(w);
    } else {
      series_ready_.erase(w);
    }
  }

  void add(std::size_t position, std::size_t node) {
    const RawNode& r = raw_[node];
    if (position >= pos_.size()) pos_.resize(position + 1);
    pos_[position] = {r.a, r.b, node, true};
    ++alive_;
    const Key key = key_of(r.a, r.b);
    const auto old = current_first(key);
    by_ends_[key].insert(position);
    refresh_parallel(key, old);
    for (const std::size_t x : {r.a, r.b}) {
      ++degree_[x];
      incident_[x].insert(position);
      refresh_series(x);
    }
  }

  void remove(std::size_t position) {
    Slot& slot = pos_[position];
    slot.alive = false;
    --alive_;
    const Key key = key_of(slot.a, slot.b);
    const auto old = current_first(key);
    by_ends_[key].erase(position);
    refresh_parallel(key, old);
    for (const std::size_t x : {slot.a, slot.b}) {
      --degree_[x];
      incident_[x].erase(position);
      refresh_series(x);
    }
  }

  std::size_t u_;
  std::size_t v_;
  std::vector<RawNode> raw_;
  std::vector<Slot> pos_;
  std::size_t alive_ = 0;
  std::vector<std::size_t> degree_;
  std::vector<std::set<std::size_t>> incident_;
  std::map<Key, std::set<std::size_t>> by_ends_;
  std::set<std::pair<std::size_t, Key>> parallel_ready_;
  std::set<std::size_t> series_ready_;
};

class TextParser {
 public:
  TextParser(std::string_view text, const MultiGraph& g) : text_(text), g_(g) {}

  std::vector<RawNode> parse() {
    term();
    if (at_ < text_.size()) fail("trailing characters");
    return std::move(nodes_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("series-parallel text: " + what + " at offset " + std::to_string(at_));
  }

  void expect(char c) {
    if (at_ >= text_.size() || text_[at_] != c) fail(std::string("expected '") + c + "'");
    ++at_;
  }

  std::string name() {
    const std::size_t start = at_;
    while (at_ < text_.size() && std::string_view(",()@").find(text_[at_]) == std::string_view::npos) ++at_;
    if (at_ == start) fail("expected a name");
    return std::string(text_.substr(start, at_ - start));
  }

  std::size_t term() {
    const bool compound =
        at_ + 1 < text_.size() && (text_[at_] == 'S' || text_[at_] == 'P') && text_[at_ + 1] == '(';
    if (!compound) {
      const std::string id = name();
      const auto e = g_.find_edge(id);
      if (!e) fail("unknown edge \"" + id + "\"");
      nodes_.push_back({NodeKind::Leaf, *e, 0, 0, 0, g_.edge(*e).u, g_.edge(*e).v});
      return nodes_.size() - 1;
    }
    const bool series = text_[at_] == 'S';
    at_ += 2;
    const std::size_t left = term();
    expect(',');
    const std::size_t right = term();
    RawNode n;
    n.left = left;
    n.right = right;
    const RawNode& l = nodes_[left];
    const RawNode& r = nodes_[right];
    if (series) {
      expect('@');
      const std::string w = name();
      const auto mid = g_.find_vertex(w);
      if (!mid) fail("unknown vertex \"" + w + "\"");
      n.kind = NodeKind::Series;
      n.middle = *mid;
      if ((l.a != *mid && l.b != *mid) || (r.a != *mid && r.b != *mid)) fail("middle vertex not shared");
      n.a = l.a == *mid ? l.b : l.a;
      n.b = r.a == *mid ? r.b : r.a;
    } else {
      n.kind = NodeKind::Parallel;
      if (!same_ends(r, l.a, l.b)) fail("parallel branches with different terminals");
      n.a = l.a;
      n.b = l.b;
    }
    expect(')');
    nodes_.push_back(n);
    return nodes_.size() - 1;
  }

  std::string_view text_;
  const MultiGraph& g_;
  std::size_t at_ = 0;
  std::vector<RawNode> nodes_;
};

}  // namespace

SPTree::SPTree(std::vector<SPNode> nodes, std::vector<std::string> vertex_names, std::vector<std::string> edge_ids)
    : nodes_(std::move(nodes)), vertex_names_(std::move(vertex_names)), edge_ids_(std::move(edge_ids)) {
  if (nodes_.empty()) {
    throw InvalidInput("empty series-parallel tree");
  }
}

std::vector<std::size_t> SPTree::leaf_edges() const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{root()};
  while (!stack.empty()) {
    const SPNode& n = nodes_[stack.back()];
    stack.pop_back();
    if (n.kind == NodeKind::Leaf) {
      out.push_back(n.edge);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return out;
}

std::string SPTree::text() const {
  std::vector<std::string> parts(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const SPNode& n = nodes_[i];
    switch (n.kind) {
      case NodeKind::Leaf:
        parts[i] = edge_ids_[n.edge];
        break;
      case NodeKind::Series:
        parts[i] = "S(" + parts[n.left] + "," + parts[n.right] + "@" + vertex_names_[n.middle] + ")";
        break;
      case NodeKind::Parallel:
        parts[i] = "P(" + parts[n.left] + "," + parts[n.right] + ")";
        break;
    }
  }
  return parts.back();
}

std::optional<SPTree> sp_recognize(const MultiGraph& g, std::size_t u, std::size_t v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw InvalidInput("terminal vertex out of range");
  }
  if (u == v) {
    throw InvalidInput("terminals must be distinct");
  }
  if (!g.is_connected()) {
    throw InvalidInput("series-parallel recognition needs a connected graph");
  }
  auto raw = Reducer(g, u, v).run();
  if (!raw) return std::nullopt;
  return SPTree(orient(std::move(*raw), u, v), g.vertex_names(), edge_id_list(g));
}

std::optional<SPTree> sp_recognize(const MultiGraph& g) {
  if (!g.terminals()) {
    throw InvalidInput("graph has no terminal pair");
  }
  return sp_recognize(g, g.terminals()->first, g.terminals()->second);
}

SPTree parse_sp_text(std::string_view text, const MultiGraph& g, std::size_t u, std::size_t v) {
  std::vector<RawNode> raw = TextParser(text, g).parse();
  SPTree tree(orient(std::move(raw), u, v), g.vertex_names(), edge_id_list(g));
  if (!validate(tree, g)) {
    throw InvalidInput("series-parallel text does not cover every edge exactly once");
  }
  return tree;
}

MultiGraph recompose(const SPTree& tree) {
  std::set<std::size_t> used;
  std::vector<std::size_t> leaves = tree.leaf_edges();
  std::sort(leaves.begin(), leaves.end());
  std::map<std::size_t, const SPNode*> leaf_node;
  for (const SPNode& n : tree.nodes()) {
    if (n.kind == NodeKind::Leaf) {
      leaf_node[n.edge] = &n;
      used.insert(n.source);
      used.insert(n.sink);
    }
  }
  std::vector<std::string> names;
  for (const std::size_t x : used) names.push_back(tree.vertex_names()[x]);
  std::vector<MultiGraph::EdgeSpec> specs;
  for (const std::size_t e : leaves) {
    const SPNode& n = *leaf_node.at(e);
    specs.push_back({tree.edge_ids()[e], tree.vertex_names()[n.source], tree.vertex_names()[n.sink]});
  }
  return MultiGraph(std::move(names), specs,
                    std::make_pair(tree.vertex_names()[tree.source()], tree.vertex_names()[tree.sink()]));
}

bool validate(const SPTree& tree, const MultiGraph& g) {
  std::vector<int> seen(g.edge_count(), 0);
  const auto& nodes = tree.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const SPNode& n = nodes[i];
    if (n.source == n.sink || n.source >= g.vertex_count() || n.sink >= g.vertex_count()) return false;
    switch (n.kind) {
      case NodeKind::Leaf: {
        if (n.edge >= g.edge_count()) return false;
        const Edge& e = g.edge(n.edge);
        if (!((e.u == n.source && e.v == n.sink) || (e.u == n.sink && e.v == n.source))) return false;
        ++seen[n.edge];
        break;
      }
      case NodeKind::Series: {
        if (n.left >= i || n.right >= i) return false;
        const SPNode& l = nodes[n.left];
        const SPNode& r = nodes[n.right];
        if (l.sink != n.middle || r.source != n.middle || l.source != n.source || r.sink != n.sink) return false;
        break;
      }
      case NodeKind::Parallel: {
        if (n.left >= i || n.right >= i) return false;
        for (const std::size_t c : {n.left, n.right}) {
          if (nodes[c].source != n.source || nodes[c].sink != n.sink) return false;
        }
        break;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

}  // namespace spinsync::sp
