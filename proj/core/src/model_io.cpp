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

#include "spinsync/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "spinsync/errors.hpp"

namespace spinsync {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw InvalidInput(std::string("model file: missing field \"") + key + "\"");
  }
  return *it;
}

std::string require_string(const json& value, const char* what) {
  if (!value.is_string()) {
    throw InvalidInput(std::string("model file: ") + what + " must be a string");
  }
  return value.get<std::string>();
}

Channel parse_channel(const json& object, const GroupSpec& group) {
  if (!object.is_object()) {
    throw InvalidInput("model file: channel must be an object");
  }
  const json& alphabet_json = require(object, "alphabet");
  if (!alphabet_json.is_array()) {
    throw InvalidInput("model file: channel alphabet must be an array");
  }
  std::vector<std::string> alphabet;
  for (const auto& s : alphabet_json) {
    alphabet.push_back(require_string(s, "alphabet symbol"));
  }
  const json& rows_json = require(object, "rows");
  if (!rows_json.is_object()) {
    throw InvalidInput("model file: channel rows must be an object keyed by input element");
  }
  std::vector<std::vector<Rational>> rows(group.order());
  std::vector<bool> seen(group.order(), false);
  for (const auto& [label, values] : rows_json.items()) {
    const std::size_t g = group.parse_element(label);
    if (seen[g]) {
      throw InvalidInput("model file: duplicate channel row \"" + label + "\"");
    }
    seen[g] = true;
    if (!values.is_array()) {
      throw InvalidInput("model file: channel row \"" + label + "\" must be an array");
    }
    for (const auto& p : values) {
      rows[g].push_back(Rational::parse(require_string(p, "probability")));
    }
  }
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (!seen[g]) {
      throw InvalidInput("model file: channel lacks row \"" + group.element_label(g) + "\"");
    }
  }
  return Channel(std::move(alphabet), std::move(rows));
}

ordered_json channel_json(const Channel& channel, const GroupSpec& group) {
  ordered_json rows = ordered_json::object();
  for (std::size_t g = 0; g < channel.input_size(); ++g) {
    ordered_json row = ordered_json::array();
    for (const auto& p : channel.row(g)) {
      row.push_back(p.str());
    }
    rows[group.element_label(g)] = std::move(row);
  }
  ordered_json out = ordered_json::object();
  out["alphabet"] = channel.alphabet();
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace

SyncModel parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw InvalidInput("model file must hold a JSON object");
  }
  GroupSpec group = GroupSpec::binary();
  if (const auto it = doc.find("group"); it != doc.end()) {
    group = GroupSpec::parse(require_string(*it, "group"));
  }

  std::vector<std::string> vertices;
  const json& vertices_json = require(doc, "vertices");
  if (!vertices_json.is_array()) {
    throw InvalidInput("model file: vertices must be an array");
  }
  for (const auto& v : vertices_json) {
    vertices.push_back(require_string(v, "vertex"));
  }

  std::vector<MultiGraph::EdgeSpec> edges;
  std::vector<Channel> channels;
  const json& edges_json = require(doc, "edges");
  if (!edges_json.is_array()) {
    throw InvalidInput("model file: edges must be an array");
  }
  for (const auto& e : edges_json) {
    if (!e.is_object()) {
      throw InvalidInput("model file: each edge must be an object");
    }
    edges.push_back({require_string(require(e, "id"), "edge id"), require_string(require(e, "from"), "edge from"),
                     require_string(require(e, "to"), "edge to")});
    channels.push_back(parse_channel(require(e, "channel"), group));
  }

  std::optional<std::pair<std::string, std::string>> terminals;
  if (const auto it = doc.find("terminals"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2) {
      throw InvalidInput("model file: terminals must be a 2-element array");
    }
    terminals = std::make_pair(require_string((*it)[0], "terminal"), require_string((*it)[1], "terminal"));
  }

  MultiGraph graph(vertices, edges, terminals);

  std::optional<std::vector<Rational>> prior;
  if (const auto it = doc.find("prior"); it != doc.end() && !it->is_null()) {
    if (it->is_string()) {
      if (it->get<std::string>() != "uniform") {
        throw InvalidInput("model file: prior must be \"uniform\" or an object");
      }
    } else if (it->is_object()) {
      prior.emplace(graph.vertex_count(), Rational(1, 2));
      for (const auto& [name, p] : it->items()) {
        (*prior)[graph.vertex(name)] = Rational::parse(require_string(p, "prior probability"));
      }
    } else {
      throw InvalidInput("model file: prior must be \"uniform\" or an object");
    }
  }
  return SyncModel(std::move(graph), std::move(channels), group, std::move(prior));
}

SyncModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open model file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

std::string model_to_json(const SyncModel& model, int indent) {
  const MultiGraph& g = model.graph();
  ordered_json doc = ordered_json::object();
  doc["group"] = model.group().name();
  doc["vertices"] = g.vertex_names();
  if (g.terminals()) {
    doc["terminals"] = {g.vertex_name(g.terminals()->first), g.vertex_name(g.terminals()->second)};
  }
  if (model.has_uniform_prior()) {
    doc["prior"] = "uniform";
  } else {
    ordered_json prior = ordered_json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      prior[g.vertex_name(v)] = model.prior_plus(v).str();
    }
    doc["prior"] = std::move(prior);
  }
  ordered_json edges = ordered_json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    ordered_json item = ordered_json::object();
    item["id"] = edge.id;
    item["from"] = g.vertex_name(edge.u);
    item["to"] = g.vertex_name(edge.v);
    item["channel"] = channel_json(model.channel(e), model.group());
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(indent);
}

void save_model(const SyncModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write model file " + path.string());
  }
  out << model_to_json(model) << '\n';
}

std::string channel_to_json(const Channel& channel, const GroupSpec& group) {
  return channel_json(channel, group).dump();
}

}  // namespace spinsync
