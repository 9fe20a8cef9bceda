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

#include "spinsync/rational.hpp"

#include <cctype>
#include <ostream>

#include "spinsync/errors.hpp"

namespace spinsync {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw InvalidInput("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) {
    throw InvalidInput("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') {
    text.erase(0, 1);
  }
  return mpz_class(text, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  const auto slash = t.find('/');
  const std::string_view num = t.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidInput("not an exact rational \"p/q\": \"" + std::string(text) + "\"");
  }
  const mpz_class d = parse_integer(den);
  if (sgn(d) == 0) {
    throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(parse_integer(num), d);
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::decimal(int significant) const {
  if (sgn(value_) == 0) {
    return "0";
  }
  mpf_class f(0, 512);
  f = value_;
  std::string buf(static_cast<std::size_t>(significant) + 32, '\0');
  const int n = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant, f.get_mpf_t());
  buf.resize(static_cast<std::size_t>(n));
  return buf;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw InvalidInput("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

void RationalSum::push(Term term, std::size_t level) {
  for (;;) {
    if (level >= levels_.size()) {
      levels_.resize(level + 1);
    }
    Term& slot = levels_[level];
    if (!slot.used) {
      slot = std::move(term);
      slot.used = true;
      return;
    }
    Term merged;
    merged.num = slot.num * term.den + term.num * slot.den;
    merged.den = slot.den * term.den;
    slot.used = false;
    term = std::move(merged);
    ++level;
  }
}

void RationalSum::add(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(numerator) == 0) {
    return;
  }
  push(Term{numerator, denominator, true}, 0);
}

void RationalSum::add(const RationalSum& other) {
  for (std::size_t level = 0; level < other.levels_.size(); ++level) {
    if (other.levels_[level].used) {
      push(other.levels_[level], level);
    }
  }
}

Rational RationalSum::total() const {
  mpz_class num = 0;
  mpz_class den = 1;
  for (const Term& t : levels_) {
    if (!t.used) {
      continue;
    }
    num = num * t.den + t.num * den;
    den *= t.den;
  }
  return Rational(num, den);
}

}  // namespace spinsync
