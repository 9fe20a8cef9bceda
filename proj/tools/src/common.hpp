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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinsync/enumeration.hpp"
#include "spinsync/kl_bits.hpp"
#include "spinsync/paths.hpp"
#include "spinsync/percolation.hpp"
#include "spinsync/rational.hpp"
#include "spinsync/sync_model.hpp"

namespace spinsync::cli {

enum class Format { Csv, Json, Text };

Format parse_format(const std::string& text);

// Flags shared by the subcommands; each subcommand registers the ones it reads.
struct Common {
  std::string model_path;
  std::string u;
  std::string v;
  std::string W;
  std::uint64_t budget_states = info::kDefaultStateBudget;
  std::uint64_t budget_paths = sp::kDefaultPathBudget;
  std::size_t budget_subsets = sp::kDefaultSubsetBudget;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  unsigned jobs = 1;
  std::string format;
  std::string out;

  Format format_or(Format fallback) const { return format.empty() ? fallback : parse_format(format); }
};

struct Endpoints {
  std::size_t u = 0;
  std::vector<std::size_t> targets;
};

SyncModel load(const Common& c);

/// u from --u or the first terminal; targets from --W, --v or the second terminal.
Endpoints resolve_endpoints(const SyncModel& model, const Common& c);

std::vector<std::string> split_list(const std::string& text);
std::string join(const std::vector<std::string>& items, const std::string& sep);
std::vector<long> parse_long_list(const std::string& text);
/// "1..4", "1,3,5" or "2".
std::vector<std::size_t> parse_range(const std::string& text);
Rational parse_rational(const std::string& text, const std::string& flag);

std::string dec(const Rational& r);
std::string dec(double x);
std::string bits(const KlBits& k);
std::string yes_no(bool b);
std::string flag(bool b);
std::string flag(const std::optional<bool>& b);

/// RFC 4180 writer: every record ends with LF, fields are quoted only when needed.
class Csv {
 public:
  /// Writes `schema_version,1` and one meta record of key=value fields.
  Csv(const std::string& table, const std::vector<std::pair<std::string, std::string>>& meta = {});
  void row(const std::vector<std::string>& fields);
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

/// Meta entries for any stochastic output.
std::vector<std::pair<std::string, std::string>> rng_meta(std::uint64_t seed, std::uint64_t trials);

}  // namespace spinsync::cli
