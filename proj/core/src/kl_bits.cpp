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

#include "spinsync/kl_bits.hpp"

#include <quadmath.h>

namespace spinsync {

std::string KlBits::str(int digits) const {
  char buffer[128];
  const int n = quadmath_snprintf(buffer, sizeof buffer, "%.*Qg", digits, value_);
  return std::string(buffer, static_cast<std::size_t>(n));
}

KlBits::Float log2_hp(KlBits::Float x) { return log2q(x); }

}  // namespace spinsync
