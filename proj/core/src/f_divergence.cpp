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

#include "spinsync/f_divergence.hpp"

#include <quadmath.h>

#include "spinsync/errors.hpp"

namespace spinsync::info {

namespace {

void require_same_support(std::span<const Rational> p, std::span<const Rational> q) {
  if (p.size() != q.size()) {
    throw InvalidInput("f-divergence needs distributions over the same alphabet");
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (q[x].is_zero() && !p[x].is_zero()) {
      throw InvalidInput("f-divergence: p is not absolutely continuous with respect to q");
    }
  }
}

// Mantissa of a positive integer of at most 128 bits.
KlBits::Float small_to_hp(const mpz_class& z) {
  const mpz_class hi = z >> 64;
  const mpz_class lo = z - (hi << 64);
  auto limb = [](const mpz_class& part) {
    KlBits::Float out = 0;
    // mpz_get_ui returns the low limb; parts here are < 2^64.
    out = static_cast<KlBits::Float>(static_cast<unsigned long long>(mpz_get_ui(part.get_mpz_t())));
    return out;
  };
  return ldexpq(limb(hi), 64) + limb(lo);
}

}  // namespace

KlBits::Float to_hp(const mpz_class& z) {
  if (sgn(z) == 0) {
    return 0;
  }
  mpz_class a = abs(z);
  const long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  long shift = 0;
  if (bits > 120) {
    shift = bits - 120;
    a >>= static_cast<mp_bitcnt_t>(shift);
  }
  const KlBits::Float m = ldexpq(small_to_hp(a), static_cast<int>(shift));
  return sgn(z) < 0 ? -m : m;
}

KlBits::Float to_hp(const mpq_class& q) {
  if (sgn(q) == 0) {
    return 0;
  }
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();
  const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long shift = 120 - (nb - db);
  if (shift > 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  const mpz_class quotient = num / den;
  const KlBits::Float m = ldexpq(small_to_hp(quotient), static_cast<int>(-shift));
  return sgn(q) < 0 ? -m : m;
}

Rational chi2_divergence(std::span<const Rational> p, std::span<const Rational> q) {
  require_same_support(p, q);
  RationalSum sum;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (q[x].is_zero()) {
      continue;
    }
    const Rational d = p[x] - q[x];
    sum.add(d * d / q[x]);
  }
  return sum.total();
}

KlBits kl_divergence(std::span<const Rational> p, std::span<const Rational> q) {
  require_same_support(p, q);
  KlBits::Float sum = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x].is_zero()) {
      continue;
    }
    sum += to_hp(p[x].value()) * log2_hp(to_hp((p[x] / q[x]).value()));
  }
  return KlBits(sum);
}

InfoValue f_divergence(std::span<const Rational> p, std::span<const Rational> q, Divergence f) {
  InfoValue out;
  out.kind = f;
  if (f == Divergence::Chi2) {
    out.chi2 = chi2_divergence(p, q);
  } else {
    out.kl = kl_divergence(p, q);
  }
  return out;
}

JointTable::JointTable(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                       std::vector<std::vector<Rational>> mass)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), mass_(std::move(mass)) {
  if (mass_.size() != row_labels_.size()) {
    throw InvalidInput("joint table: row count mismatch");
  }
  for (const auto& row : mass_) {
    if (row.size() != col_labels_.size()) {
      throw InvalidInput("joint table: column count mismatch");
    }
    for (const auto& m : row) {
      if (m.sign() < 0) {
        throw InvalidInput("joint table: negative mass");
      }
    }
  }
}

Rational JointTable::total() const {
  Rational t;
  for (const auto& row : mass_) {
    for (const auto& m : row) {
      t += m;
    }
  }
  return t;
}

std::vector<Rational> JointTable::row_marginal() const {
  std::vector<Rational> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto& m : mass_[r]) {
      out[r] += m;
    }
  }
  return out;
}

std::vector<Rational> JointTable::col_marginal() const {
  std::vector<Rational> out(cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      out[c] += mass_[r][c];
    }
  }
  return out;
}

std::vector<Rational> JointTable::joint_flat() const {
  const Rational t = total();
  std::vector<Rational> out;
  out.reserve(rows() * cols());
  for (const auto& row : mass_) {
    for (const auto& m : row) {
      out.push_back(m / t);
    }
  }
  return out;
}

std::vector<Rational> JointTable::product_flat() const {
  const Rational t = total();
  const auto rm = row_marginal();
  const auto cm = col_marginal();
  std::vector<Rational> out;
  out.reserve(rows() * cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      out.push_back(rm[r] * cm[c] / (t * t));
    }
  }
  return out;
}

Rational JointTable::chi2_information() const {
  const Rational t = total();
  if (t.is_zero()) {
    return Rational(0);
  }
  const auto p = joint_flat();
  const auto q = product_flat();
  return t * chi2_divergence(p, q);
}

KlBits JointTable::kl_information() const {
  const Rational t = total();
  if (t.is_zero()) {
    return KlBits(0);
  }
  const auto p = joint_flat();
  const auto q = product_flat();
  return KlBits(to_hp(t.value()) * kl_divergence(p, q).value());
}

InfoValue JointTable::information(Divergence f) const {
  InfoValue out;
  out.kind = f;
  if (f == Divergence::Chi2) {
    out.chi2 = chi2_information();
  } else {
    out.kl = kl_information();
  }
  return out;
}

Rational conditional_chi2(std::span<const JointTable> tables) {
  RationalSum sum;
  for (const auto& t : tables) {
    sum.add(t.chi2_information());
  }
  return sum.total();
}

KlBits conditional_kl(std::span<const JointTable> tables) {
  KlBits sum;
  for (const auto& t : tables) {
    sum += t.kl_information();
  }
  return sum;
}

}  // namespace spinsync::info
