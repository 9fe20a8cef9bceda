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

#include "spinsync/channel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "spinsync/errors.hpp"

namespace spinsync {

Channel::Channel(std::vector<std::string> alphabet, std::vector<std::vector<Rational>> rows)
    : alphabet_(std::move(alphabet)), rows_(std::move(rows)) {
  if (alphabet_.empty()) {
    throw InvalidInput("channel alphabet is empty");
  }
  if (rows_.size() < 2) {
    throw InvalidInput("channel needs one row per input element (at least 2)");
  }
  std::set<std::string> seen;
  for (const auto& s : alphabet_) {
    if (!seen.insert(s).second) {
      throw InvalidInput("duplicate channel output symbol \"" + s + "\"");
    }
  }
  for (const auto& row : rows_) {
    if (row.size() != alphabet_.size()) {
      throw InvalidInput("channel row length does not match alphabet size");
    }
    Rational sum;
    for (const auto& p : row) {
      if (p.sign() < 0) {
        throw InvalidInput("negative channel probability " + p.str());
      }
      sum += p;
    }
    if (sum != Rational(1)) {
      throw InvalidInput("channel row sums to " + sum.str() + ", not 1");
    }
  }
}

bool Channel::is_independent() const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const auto& r) { return r == rows_.front(); });
}

Channel make_bsc(const Rational& epsilon) {
  if (!epsilon.is_probability()) {
    throw InvalidInput("BSC flip probability " + epsilon.str() + " outside [0,1]");
  }
  const Rational keep = Rational(1) - epsilon;
  return Channel({"+1", "-1"}, {{keep, epsilon}, {epsilon, keep}});
}

Channel make_bernoulli_pair(const Rational& a, const Rational& b, long n) {
  if (n <= 0) {
    throw InvalidInput("Bernoulli pair needs a positive n");
  }
  const Rational p = a / Rational(n);
  const Rational q = b / Rational(n);
  if (!p.is_probability() || !q.is_probability()) {
    throw InvalidInput("Bernoulli pair probabilities a/n, b/n must lie in [0,1]");
  }
  return Channel({"0", "1"}, {{Rational(1) - p, p}, {Rational(1) - q, q}});
}

Channel make_noiseless(const GroupSpec& group) {
  const std::size_t k = group.order();
  std::vector<std::string> alphabet;
  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
  for (std::size_t g = 0; g < k; ++g) {
    alphabet.push_back(group.element_label(g));
    rows[g][g] = Rational(1);
  }
  return Channel(std::move(alphabet), std::move(rows));
}

Channel make_erasure(const GroupSpec& group) {
  return Channel({"?"}, std::vector<std::vector<Rational>>(group.order(), {Rational(1)}));
}

namespace {

std::vector<std::string> product_alphabet(const Channel& first, const Channel& second) {
  std::vector<std::string> alphabet;
  alphabet.reserve(first.output_size() * second.output_size());
  std::set<std::string> seen;
  bool clash = false;
  for (const auto& a : first.alphabet()) {
    for (const auto& b : second.alphabet()) {
      alphabet.push_back("(" + a + "," + b + ")");
      clash = clash || !seen.insert(alphabet.back()).second;
    }
  }
  if (clash) {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      alphabet[i] = "s" + std::to_string(i);
    }
  }
  return alphabet;
}

void require_same_input(const Channel& first, const Channel& second) {
  if (first.input_size() != second.input_size()) {
    throw InvalidInput("channels act on different groups (Z" + std::to_string(first.input_size()) + " vs Z" +
                       std::to_string(second.input_size()) + ")");
  }
}

}  // namespace

Channel compose_series(const Channel& first, const Channel& second) {
  require_same_input(first, second);
  const std::size_t k = first.input_size();
  const GroupSpec group(k);
  const Rational weight(1, static_cast<long>(k));
  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(first.output_size() * second.output_size()));
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t a = 0; a < first.output_size(); ++a) {
      for (std::size_t b = 0; b < second.output_size(); ++b) {
        Rational p;
        for (std::size_t h = 0; h < k; ++h) {
          p += first.prob(group.sub(g, h), a) * second.prob(h, b);
        }
        rows[g][a * second.output_size() + b] = p * weight;
      }
    }
  }
  return Channel(product_alphabet(first, second), std::move(rows));
}

Channel product_parallel(const Channel& first, const Channel& second) {
  require_same_input(first, second);
  const std::size_t k = first.input_size();
  std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(first.output_size() * second.output_size()));
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t a = 0; a < first.output_size(); ++a) {
      for (std::size_t b = 0; b < second.output_size(); ++b) {
        rows[g][a * second.output_size() + b] = first.prob(g, a) * second.prob(g, b);
      }
    }
  }
  return Channel(product_alphabet(first, second), std::move(rows));
}

Channel merge_equivalent_outputs(const Channel& channel) {
  const std::size_t k = channel.input_size();
  std::map<std::vector<Rational>, std::size_t> classes;
  std::vector<std::string> alphabet;
  std::vector<std::vector<Rational>> rows(k);
  std::vector<Rational> column(k);
  for (std::size_t y = 0; y < channel.output_size(); ++y) {
    Rational total;
    for (std::size_t g = 0; g < k; ++g) {
      column[g] = channel.prob(g, y);
      total += column[g];
    }
    if (total.is_zero()) {
      continue;
    }
    std::vector<Rational> key(k);
    for (std::size_t g = 0; g < k; ++g) {
      key[g] = column[g] / total;
    }
    const auto [it, inserted] = classes.try_emplace(std::move(key), alphabet.size());
    if (inserted) {
      alphabet.push_back(channel.symbol(y));
      for (std::size_t g = 0; g < k; ++g) {
        rows[g].push_back(column[g]);
      }
    } else {
      for (std::size_t g = 0; g < k; ++g) {
        rows[g][it->second] += column[g];
      }
    }
  }
  return Channel(std::move(alphabet), std::move(rows));
}

std::optional<std::vector<std::size_t>> detect_symmetry(const Channel& channel) {
  if (!channel.is_binary()) {
    return std::nullopt;
  }
  std::map<std::pair<Rational, Rational>, std::vector<std::size_t>> by_profile;
  for (std::size_t y = 0; y < channel.output_size(); ++y) {
    by_profile[{channel.prob(0, y), channel.prob(1, y)}].push_back(y);
  }
  std::vector<std::size_t> involution(channel.output_size());
  for (const auto& [profile, symbols] : by_profile) {
    const auto& [plus, minus] = profile;
    if (plus == minus) {
      for (const std::size_t y : symbols) {
        involution[y] = y;
      }
      continue;
    }
    const auto mirror = by_profile.find({minus, plus});
    if (mirror == by_profile.end() || mirror->second.size() != symbols.size()) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      involution[symbols[i]] = mirror->second[i];
    }
  }
  return involution;
}

Channel permute_outputs(const Channel& channel, std::span<const std::size_t> perm) {
  const std::size_t m = channel.output_size();
  if (perm.size() != m) {
    throw InvalidInput("output permutation has the wrong size");
  }
  std::vector<std::string> alphabet(m);
  std::vector<std::vector<Rational>> rows(channel.input_size(), std::vector<Rational>(m));
  std::vector<bool> hit(m, false);
  for (std::size_t y = 0; y < m; ++y) {
    if (perm[y] >= m || hit[perm[y]]) {
      throw InvalidInput("not a permutation of the output alphabet");
    }
    hit[perm[y]] = true;
    alphabet[perm[y]] = channel.symbol(y);
    for (std::size_t g = 0; g < channel.input_size(); ++g) {
      rows[g][perm[y]] = channel.prob(g, y);
    }
  }
  return Channel(std::move(alphabet), std::move(rows));
}

namespace {

std::vector<std::vector<Rational>> sorted_columns(const Channel& channel) {
  std::vector<std::vector<Rational>> columns(channel.output_size(), std::vector<Rational>(channel.input_size()));
  for (std::size_t y = 0; y < channel.output_size(); ++y) {
    for (std::size_t g = 0; g < channel.input_size(); ++g) {
      columns[y][g] = channel.prob(g, y);
    }
  }
  std::sort(columns.begin(), columns.end());
  return columns;
}

}  // namespace

bool equivalent_channels(const Channel& a, const Channel& b) {
  if (a.input_size() != b.input_size()) {
    return false;
  }
  return sorted_columns(merge_equivalent_outputs(a)) == sorted_columns(merge_equivalent_outputs(b));
}

Channel reversed_input(const Channel& channel) {
  const GroupSpec group(channel.input_size());
  std::vector<std::vector<Rational>> rows;
  rows.reserve(channel.input_size());
  for (std::size_t g = 0; g < channel.input_size(); ++g) {
    const auto row = channel.row(group.neg(g));
    rows.emplace_back(row.begin(), row.end());
  }
  return Channel(channel.alphabet(), std::move(rows));
}

}  // namespace spinsync
