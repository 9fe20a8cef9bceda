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

#include <span>
#include <string>
#include <vector>

#include "spinsync/kl_bits.hpp"
#include "spinsync/rational.hpp"

namespace spinsync::info {

enum class Divergence { Chi2, KL };

/// Value of an f-divergence or f-information: exact for chi-squared, binary128 for KL (bits).
struct InfoValue {
  Divergence kind = Divergence::Chi2;
  Rational chi2;
  KlBits kl;

  double to_double() const { return kind == Divergence::Chi2 ? chi2.to_double() : kl.to_double(); }
  std::string str() const { return kind == Divergence::Chi2 ? chi2.str() : kl.str(); }
};

/// sum_x q(x) (p(x)/q(x) - 1)^2. Throws InvalidInput unless p << q.
Rational chi2_divergence(std::span<const Rational> p, std::span<const Rational> q);
/// sum_x p(x) log2(p(x)/q(x)). Throws InvalidInput unless p << q.
KlBits kl_divergence(std::span<const Rational> p, std::span<const Rational> q);
InfoValue f_divergence(std::span<const Rational> p, std::span<const Rational> q, Divergence f);

/// Joint law of two finite variables. In conditional use the table carries
/// the mass of one conditioning outcome rather than summing to 1, and its
/// informations come out weighted by that mass.
class JointTable {
 public:
  JointTable(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
             std::vector<std::vector<Rational>> mass);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const Rational& mass(std::size_t r, std::size_t c) const { return mass_[r][c]; }

  Rational total() const;
  std::vector<Rational> row_marginal() const;
  std::vector<Rational> col_marginal() const;

  /// Row-major joint and the matching product of marginals, both normalized.
  std::vector<Rational> joint_flat() const;
  std::vector<Rational> product_flat() const;

  /// total * D_f(joint || product of marginals), with the table normalized first.
  Rational chi2_information() const;
  KlBits kl_information() const;
  InfoValue information(Divergence f) const;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::vector<Rational>> mass_;
};

/// Conditional f-information: sum over the weighted tables of each table's information.
Rational conditional_chi2(std::span<const JointTable> tables);
KlBits conditional_kl(std::span<const JointTable> tables);

/// Binary128 value of an exact rational (correctly scaled for huge operands).
KlBits::Float to_hp(const mpq_class& q);
KlBits::Float to_hp(const mpz_class& z);

}  // namespace spinsync::info
