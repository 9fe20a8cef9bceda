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

#include <compare>
#include <string>

namespace spinsync {

/// KL information in bits, carried in IEEE binary128 (113-bit significand).
class KlBits {
 public:
  using Float = __float128;

  constexpr KlBits() = default;
  constexpr explicit KlBits(Float value) : value_(value) {}

  constexpr Float value() const { return value_; }
  double to_double() const { return static_cast<double>(value_); }
  /// `digits` significant digits, %g style.
  std::string str(int digits = 30) const;

  KlBits& operator+=(KlBits o) { value_ += o.value_; return *this; }
  friend KlBits operator+(KlBits a, KlBits b) { return a += b; }
  friend KlBits operator-(KlBits a, KlBits b) { return KlBits(a.value_ - b.value_); }
  friend KlBits operator*(KlBits a, KlBits b) { return KlBits(a.value_ * b.value_); }
  friend bool operator==(KlBits a, KlBits b) { return a.value_ == b.value_; }
  friend bool operator<(KlBits a, KlBits b) { return a.value_ < b.value_; }
  friend bool operator<=(KlBits a, KlBits b) { return a.value_ <= b.value_; }
  friend bool operator>(KlBits a, KlBits b) { return a.value_ > b.value_; }
  friend bool operator>=(KlBits a, KlBits b) { return a.value_ >= b.value_; }

 private:
  Float value_ = 0;
};

/// log2 in binary128.
KlBits::Float log2_hp(KlBits::Float x);

}  // namespace spinsync
