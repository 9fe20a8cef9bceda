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

#include "common.hpp"

#include <charconv>
#include <cstdio>

#include "spinsync/errors.hpp"
#include "spinsync/model_io.hpp"
#include "spinsync/random.hpp"

namespace spinsync::cli {

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "text") return Format::Text;
  throw InvalidInput("unknown format '" + text + "' (expected csv, json or text)");
}

SyncModel load(const Common& c) {
  if (c.model_path.empty()) throw InvalidInput("--model is required");
  return load_model(c.model_path);
}

Endpoints resolve_endpoints(const SyncModel& model, const Common& c) {
  const MultiGraph& g = model.graph();
  const auto& terminals = g.terminals();
  Endpoints e;
  if (!c.u.empty()) {
    e.u = g.vertex(c.u);
  } else if (terminals) {
    e.u = terminals->first;
  } else {
    throw InvalidInput("no --u given and the model has no terminals");
  }
  if (!c.W.empty()) {
    if (!c.v.empty()) throw InvalidInput("--v and --W are exclusive");
    for (const std::string& name : split_list(c.W)) e.targets.push_back(g.vertex(name));
    if (e.targets.empty()) throw InvalidInput("--W is empty");
  } else if (!c.v.empty()) {
    e.targets = {g.vertex(c.v)};
  } else if (terminals) {
    e.targets = {terminals->second};
  } else {
    throw InvalidInput("no --v or --W given and the model has no terminals");
  }
  for (const std::size_t w : e.targets) {
    if (w == e.u) throw InvalidInput("target set contains u");
  }
  return e;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, comma - start);
    const auto first = item.find_first_not_of(" \t");
    if (first != std::string::npos) out.push_back(item.substr(first, item.find_last_not_of(" \t") - first + 1));
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

namespace {

long parse_long(const std::string& text) {
  long value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) throw InvalidInput("not an integer: '" + text + "'");
  return value;
}

}  // namespace

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_long(item));
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const long lo = parse_long(text.substr(0, dots));
    const long hi = parse_long(text.substr(dots + 2));
    if (lo < 0 || hi < lo) throw InvalidInput("bad range '" + text + "'");
    for (long x = lo; x <= hi; ++x) out.push_back(static_cast<std::size_t>(x));
    return out;
  }
  for (const long x : parse_long_list(text)) {
    if (x < 0) throw InvalidInput("negative value in '" + text + "'");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(flag + ": " + e.what());
  }
}

std::string dec(const Rational& r) { return r.decimal(17); }

std::string dec(double x) {
  char buffer[64];
  const int n = std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return std::string(buffer, static_cast<std::size_t>(n));
}

std::string bits(const KlBits& k) { return k.str(17); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string flag(bool b) { return b ? "true" : "false"; }

std::string flag(const std::optional<bool>& b) { return b ? flag(*b) : ""; }

Csv::Csv(const std::string& table, const std::vector<std::pair<std::string, std::string>>& meta) {
  row({"schema_version", "1"});
  std::vector<std::string> fields{"meta", "table=" + table};
  for (const auto& [k, v] : meta) fields.push_back(k + "=" + v);
  row(fields);
}

void Csv::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") == std::string::npos) {
      text_ += f;
      continue;
    }
    text_ += '"';
    for (const char ch : f) {
      if (ch == '"') text_ += '"';
      text_ += ch;
    }
    text_ += '"';
  }
  text_ += '\n';
}

std::vector<std::pair<std::string, std::string>> rng_meta(std::uint64_t seed, std::uint64_t trials) {
  return {{"seed", std::to_string(seed)}, {"trials", std::to_string(trials)}, {"generator", std::string(kGeneratorName)}};
}

}  // namespace spinsync::cli
