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

#include "spinsync/group.hpp"

#include <charconv>

#include "spinsync/errors.hpp"

namespace spinsync {

GroupSpec::GroupSpec(std::size_t order) : order_(order) {
  if (order < 2) {
    throw InvalidInput("group order must be at least 2");
  }
}

GroupSpec GroupSpec::parse(std::string_view name) {
  std::string_view digits = name;
  if (digits.starts_with("Z/") && digits.ends_with("Z")) {
    digits = digits.substr(2, digits.size() - 3);
  } else if (digits.starts_with("Z")) {
    digits.remove_prefix(1);
  } else {
    throw InvalidInput("unknown group \"" + std::string(name) + "\"");
  }
  std::size_t order = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), order);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidInput("unknown group \"" + std::string(name) + "\"");
  }
  return GroupSpec(order);
}

std::string GroupSpec::name() const { return "Z" + std::to_string(order_); }

std::string GroupSpec::element_label(std::size_t g) const {
  if (is_binary()) {
    return g == 0 ? "+1" : "-1";
  }
  return std::to_string(g);
}

std::size_t GroupSpec::parse_element(std::string_view label) const {
  if (is_binary()) {
    if (label == "+1") return 0;
    if (label == "-1") return 1;
    throw InvalidInput("binary channel rows are labelled \"+1\" and \"-1\", got \"" + std::string(label) + "\"");
  }
  std::size_t g = 0;
  const auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), g);
  if (ec != std::errc() || ptr != label.data() + label.size() || g >= order_) {
    throw InvalidInput("bad group element \"" + std::string(label) + "\" for " + name());
  }
  return g;
}

}  // namespace spinsync
