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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinsync/group.hpp"
#include "spinsync/rational.hpp"

namespace spinsync {

/// Finite-output channel from a group element (the edge's spin difference,
/// the spin product in the binary case) to an observation symbol.
///
/// Row g is the law of the output given input g; for Z2 row 0 is Q(.|+1) and
/// row 1 is Q(.|-1). Every row sums to exactly 1.
class Channel {
 public:
  Channel(std::vector<std::string> alphabet, std::vector<std::vector<Rational>> rows);

  std::size_t input_size() const { return rows_.size(); }
  std::size_t output_size() const { return alphabet_.size(); }
  bool is_binary() const { return rows_.size() == 2; }

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& symbol(std::size_t y) const { return alphabet_[y]; }
  std::span<const Rational> row(std::size_t input) const { return rows_[input]; }
  const Rational& prob(std::size_t input, std::size_t y) const { return rows_[input][y]; }

  /// Q(.|+1) and Q(.|-1) for binary channels.
  std::span<const Rational> given_plus() const { return rows_[0]; }
  std::span<const Rational> given_minus() const { return rows_[1]; }

  /// True when every row is the same law (the output carries no information).
  bool is_independent() const;

  friend bool operator==(const Channel&, const Channel&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::vector<Rational>> rows_;
};

/// Binary symmetric channel with flip probability epsilon, alphabet ("+1", "-1").
Channel make_bsc(const Rational& epsilon);
/// Q(1|+1) = a/n, Q(1|-1) = b/n on alphabet ("0", "1").
Channel make_bernoulli_pair(const Rational& a, const Rational& b, long n);
/// Output equals the input element.
Channel make_noiseless(const GroupSpec& group = GroupSpec::binary());
/// Single-symbol channel; independent of the input.
Channel make_erasure(const GroupSpec& group = GroupSpec::binary());

/// Observation of the composite difference across a uniform middle spin:
/// Q'((a,b)|g) = (1/k) sum_h q1(a|g-h) q2(b|h). For Z2 this is the series rule.
Channel compose_series(const Channel& first, const Channel& second);
/// Two conditionally independent observations of the same input.
Channel product_parallel(const Channel& first, const Channel& second);
/// Sufficient-statistic reduction: drops outputs of probability zero under
/// every input and merges outputs whose likelihood columns are proportional.
/// The merged symbol keeps the name of its first member.
Channel merge_equivalent_outputs(const Channel& channel);

/// Output involution T with Q(T(y)|+1) = Q(y|-1), if one exists. Entry y of
/// the result is T(y). Only binary-input channels can be symmetric.
std::optional<std::vector<std::size_t>> detect_symmetry(const Channel& channel);

/// Relabels outputs: symbol y of the input becomes symbol perm[y].
Channel permute_outputs(const Channel& channel, std::span<const std::size_t> perm);

/// Equality of the merged channels up to a relabeling of their outputs.
bool equivalent_channels(const Channel& a, const Channel& b);

/// Channel obtained by swapping the roles of the edge's endpoints (g -> -g).
Channel reversed_input(const Channel& channel);

}  // namespace spinsync
