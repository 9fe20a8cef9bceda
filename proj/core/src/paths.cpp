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

#include "spinsync/paths.hpp"

#include <string>

#include "spinsync/errors.hpp"

namespace spinsync::sp {

namespace {

class Walker {
 public:
  Walker(const MultiGraph& g, std::size_t v, std::uint64_t budget,
         const std::function<void(std::span<const std::size_t>)>& visit)
      : g_(g), target_(v), budget_(budget), visit_(visit), on_path_(g.vertex_count(), false) {}

  void walk(std::size_t at) {
    if (at == target_) {
      if (++found_ > budget_) {
        throw BudgetExceeded("more than " + std::to_string(budget_) + " paths between the terminals");
      }
      visit_(edges_);
      return;
    }
    on_path_[at] = true;
    for (const std::size_t e : g_.incident(at)) {
      const std::size_t next = g_.edge(e).other(at);
      if (on_path_[next]) continue;
      edges_.push_back(e);
      walk(next);
      edges_.pop_back();
    }
    on_path_[at] = false;
  }

 private:
  const MultiGraph& g_;
  std::size_t target_;
  std::uint64_t budget_;
  const std::function<void(std::span<const std::size_t>)>& visit_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> edges_;
  std::uint64_t found_ = 0;
};

}  // namespace

void for_each_path(const MultiGraph& g, std::size_t u, std::size_t v, std::uint64_t budget,
                   const std::function<void(std::span<const std::size_t>)>& visit) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw InvalidInput("path endpoint out of range");
  }
  if (u == v) {
    throw InvalidInput("path endpoints must be distinct");
  }
  Walker(g, v, budget, visit).walk(u);
}

std::vector<Path> enumerate_paths(const MultiGraph& g, std::size_t u, std::size_t v, std::uint64_t budget) {
  std::vector<Path> paths;
  for_each_path(g, u, v, budget, [&](std::span<const std::size_t> p) { paths.emplace_back(p.begin(), p.end()); });
  return paths;
}

std::uint64_t count_paths(const MultiGraph& g, std::size_t u, std::size_t v, std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_path(g, u, v, budget, [&](std::span<const std::size_t>) { ++count; });
  return count;
}

}  // namespace spinsync::sp
