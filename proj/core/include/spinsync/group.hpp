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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace spinsync {

/// Spin alphabet: the cyclic group Z/kZ. k = 2 is the binary ±1 case, where
/// element 0 stands for +1 and element 1 for -1 so that group addition is the
/// product of spins.
class GroupSpec {
 public:
  constexpr GroupSpec() = default;
  explicit GroupSpec(std::size_t order);

  static GroupSpec binary() { return GroupSpec(2); }
  /// Accepts "Z2", "Z4", "Z/4Z", "Zk" style names.
  static GroupSpec parse(std::string_view name);

  std::size_t order() const { return order_; }
  bool is_binary() const { return order_ == 2; }
  std::string name() const;

  std::size_t add(std::size_t a, std::size_t b) const { return (a + b) % order_; }
  std::size_t sub(std::size_t a, std::size_t b) const { return (a + order_ - b) % order_; }
  std::size_t neg(std::size_t a) const { return (order_ - a) % order_; }

  /// Row label used in model files: "+1"/"-1" for Z2, "0".."k-1" otherwise.
  std::string element_label(std::size_t g) const;
  /// Inverse of element_label; throws InvalidInput.
  std::size_t parse_element(std::string_view label) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::size_t order_ = 2;
};

/// ±1 value of a binary group element.
inline int spin_sign(std::size_t g) { return g == 0 ? 1 : -1; }

}  // namespace spinsync
