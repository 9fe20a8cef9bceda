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

#include <algorithm>

#include "commands.hpp"
#include "json.hpp"
#include "spinsync/bounds.hpp"
#include "spinsync/errors.hpp"
#include "spinsync/random.hpp"
#include "spinsync/sp_collapse.hpp"
#include "spinsync/sp_tree.hpp"

namespace spinsync::cli {

using nlohmann::ordered_json;

namespace {

std::optional<sp::SPTree> recognize(const MultiGraph& g, std::size_t u, std::size_t v) {
  try {
    return sp::sp_recognize(g, u, v);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

std::vector<std::string> names(const MultiGraph& g, const std::vector<std::size_t>& vertices) {
  std::vector<std::string> out;
  for (const std::size_t v : vertices) out.push_back(g.vertex_name(v));
  return out;
}

// The model with W tied to one vertex when |W| > 1.
struct Target {
  SyncModel model;
  std::size_t vertex;
  std::vector<std::size_t> tie_edges;
};

Target target_of(const SyncModel& model, const Endpoints& ep) {
  if (ep.targets.size() == 1) return {model, ep.targets.front(), {}};
  TiedModel tied = tie_vertex_set(model, ep.targets);
  Target t{std::move(tied.model), tied.target, {}};
  for (std::size_t e = model.graph().edge_count(); e < t.model.graph().edge_count(); ++e) t.tie_edges.push_back(e);
  return t;
}

}  // namespace

Output cmd_info(const InfoArgs& a) {
  const SyncModel model = load(a.c);
  const Endpoints ep = resolve_endpoints(model, a.c);
  const MultiGraph& g = model.graph();

  std::vector<std::size_t> observed;
  if (a.observed) {
    for (const std::string& id : split_list(*a.observed)) {
      const auto e = g.find_edge(id);
      if (!e) throw InvalidInput("unknown edge '" + id + "'");
      observed.push_back(*e);
    }
    std::sort(observed.begin(), observed.end());
    observed.erase(std::unique(observed.begin(), observed.end()), observed.end());
  } else {
    observed = all_edges(model);
  }
  const std::size_t observed_count = observed.size();

  const Target t = target_of(model, ep);
  observed.insert(observed.end(), t.tie_edges.begin(), t.tie_edges.end());

  info::EnumerationOptions options;
  options.state_budget = a.c.budget_states;
  options.jobs = a.c.jobs;

  Rational i2;
  KlBits kl;
  std::string sandwich;
  if (a.mode == "exact") {
    if (t.model.is_uniform_binary()) {
      const info::SandwichReport s = info::sandwich_check(t.model, ep.u, t.vertex, observed, options);
      i2 = s.i2;
      kl = s.ikl;
      sandwich = s.holds() ? "holds" : "fails";
    } else {
      const info::ConditionalInfo ci = info::exact_conditional_info(t.model, ep.u, t.vertex, observed, options);
      i2 = ci.chi2;
      kl = ci.kl;
      sandwich = "n/a: non-uniform or non-binary spins";
    }
  } else if (a.mode == "collapsed") {
    if (observed.size() != t.model.graph().edge_count()) {
      throw InvalidInput("--mode collapsed needs every edge observed");
    }
    const auto tree = recognize(t.model.graph(), ep.u, t.vertex);
    if (!tree) throw NotApplicable("--mode collapsed needs a series-parallel graph between u and the target");
    const Channel channel =
        sp::sp_collapse_to_channel(t.model, *tree, std::min(a.c.budget_states, sp::kDefaultCollapseBudget));
    const SyncModel single(MultiGraph({"u", "v"}, {{"collapsed", "u", "v"}}), {channel});
    const info::SandwichReport s = info::sandwich_check(single, 0, 1, all_edges(single), options);
    i2 = s.i2;
    kl = s.ikl;
    sandwich = s.holds() ? "holds" : "fails";
  } else {
    throw InvalidInput("unknown mode '" + a.mode + "' (expected exact or collapsed)");
  }

  const std::string targets = join(names(g, ep.targets), ",");
  Output out;
  switch (a.c.format_or(Format::Text)) {
    case Format::Text:
      out.text = "u = " + g.vertex_name(ep.u) + "\n" + (ep.targets.size() == 1 ? "v = " : "W = ") + targets + "\n" +
                 "observed edges = " + std::to_string(observed_count) + " of " + std::to_string(g.edge_count()) +
                 "\nI2 = " + i2.str() + " (" + dec(i2) + ")\nI_KL = " + bits(kl) + " bits\n" +
                 "sandwich I2/2 <= I_KL <= I2: " + sandwich + "\n";
      break;
    case Format::Json: {
      ordered_json j;
      j["u"] = g.vertex_name(ep.u);
      j["W"] = names(g, ep.targets);
      j["mode"] = a.mode;
      j["observed_edges"] = observed_count;
      j["i2"] = i2.str();
      j["i2_decimal"] = dec(i2);
      j["ikl_bits"] = bits(kl);
      j["sandwich"] = sandwich;
      out.text = j.dump(2) + "\n";
      break;
    }
    case Format::Csv: {
      Csv csv("info");
      csv.row({"u", "W", "mode", "observed_edges", "i2", "i2_decimal", "ikl_bits", "sandwich"});
      csv.row({g.vertex_name(ep.u), targets, a.mode, std::to_string(observed_count), i2.str(), dec(i2), bits(kl),
               sandwich});
      out.text = csv.str();
      break;
    }
  }
  return out;
}

namespace {

// Value cell: exact p/q, else the decimal, else the note.
std::string bound_cell(const std::optional<bounds::PercolationBound>& b, const std::string& note) {
  if (!b) return note;
  return b->exact ? b->exact->str() : dec(b->value);
}

ordered_json bound_json(const std::optional<bounds::PercolationBound>& b, const std::string& note) {
  ordered_json j;
  if (!b) {
    j["note"] = note;
    return j;
  }
  if (b->exact) j["exact"] = b->exact->str();
  j["decimal"] = dec(b->value);
  j["method"] = b->method;
  if (b->estimate) {
    j["half_width"] = dec(b->estimate->half_width);
    j["hits"] = b->estimate->hits;
    j["trials"] = b->estimate->trials;
    j["seed"] = b->estimate->seed;
    j["generator"] = b->estimate->generator;
  }
  return j;
}

std::string bound_text(const std::optional<bounds::PercolationBound>& b, const std::string& note) {
  if (!b) return note;
  std::string s = b->exact ? b->exact->str() + " (" + dec(b->value) + ")" : dec(b->value);
  s += " [" + b->method;
  if (b->estimate) s += ", +/- " + dec(b->estimate->half_width);
  return s + "]";
}

}  // namespace

Output cmd_bounds(const Common& c) {
  const SyncModel model = load(c);
  const Endpoints ep = resolve_endpoints(model, c);
  bounds::BoundOptions options;
  options.state_budget = c.budget_states;
  options.path_budget = c.budget_paths;
  options.subset_budget = c.budget_subsets;
  options.monte_carlo_trials = c.trials.value_or(options.monte_carlo_trials);
  options.seed = c.seed.value_or(options.seed);
  options.jobs = c.jobs;
  const bounds::BoundReport r = bounds::evaluate_bounds(model, ep.u, ep.targets, options);

  const std::string exact = r.exact_i2 ? r.exact_i2->str() : r.exact_note;
  const std::string path_sum = r.path_sum ? r.path_sum->str() : r.path_sum_note;
  Output out;
  switch (c.format_or(Format::Csv)) {
    case Format::Csv: {
      Csv csv("bounds", rng_meta(options.seed, options.monte_carlo_trials));
      csv.row({"u", "W", "exact", "exact_decimal", "exact_ikl_bits", "path_sum", "path_sum_decimal", "path_sum_holds",
               "symmetric_perc", "symmetric_perc_decimal", "symmetric_method", "symmetric_holds", "sdpi_perc",
               "sdpi_perc_decimal", "sdpi_method", "sdpi_holds"});
      const auto& sym = r.symmetric_percolation;
      const auto& sdpi = r.sdpi_percolation;
      csv.row({r.u, join(r.targets, ","), exact, r.exact_i2 ? dec(*r.exact_i2) : "",
               r.exact_ikl ? bits(*r.exact_ikl) : "", path_sum, r.path_sum ? dec(*r.path_sum) : "",
               flag(r.path_sum_holds), bound_cell(sym, r.symmetric_note), sym ? dec(sym->value) : "",
               sym ? sym->method : "", flag(r.symmetric_holds), bound_cell(sdpi, r.sdpi_note),
               sdpi ? dec(sdpi->value) : "", sdpi ? sdpi->method : "", flag(r.sdpi_holds)});
      out.text = csv.str();
      break;
    }
    case Format::Json: {
      ordered_json j;
      j["u"] = r.u;
      j["W"] = r.targets;
      j["seed"] = options.seed;
      j["trials"] = options.monte_carlo_trials;
      j["generator"] = std::string(kGeneratorName);
      ordered_json e;
      if (r.exact_i2) {
        e["i2"] = r.exact_i2->str();
        e["i2_decimal"] = dec(*r.exact_i2);
      } else {
        e["note"] = r.exact_note;
      }
      if (r.exact_ikl) e["ikl_bits"] = bits(*r.exact_ikl);
      j["exact"] = e;
      ordered_json p;
      if (r.path_sum) {
        p["exact"] = r.path_sum->str();
        p["decimal"] = dec(*r.path_sum);
      } else {
        p["note"] = r.path_sum_note;
      }
      j["path_sum"] = p;
      j["symmetric_perc"] = bound_json(r.symmetric_percolation, r.symmetric_note);
      j["sdpi_perc"] = bound_json(r.sdpi_percolation, r.sdpi_note);
      j["edges"] = ordered_json::array();
      for (const bounds::EdgeBoundRow& row : r.edges) {
        ordered_json x;
        x["id"] = row.id;
        x["symmetric"] = row.symmetric;
        if (row.gamma_i2) x["i2"] = row.gamma_i2->str();
        if (row.eta) x["eta"] = dec(*row.eta);
        j["edges"].push_back(x);
      }
      j["holds"] = {{"path_sum", flag(r.path_sum_holds)},
                    {"symmetric_perc", flag(r.symmetric_holds)},
                    {"sdpi_perc", flag(r.sdpi_holds)}};
      out.text = j.dump(2) + "\n";
      break;
    }
    case Format::Text: {
      std::string s = "u = " + r.u + "\nW = " + join(r.targets, ",") + "\n";
      s += "exact I2 = " + (r.exact_i2 ? r.exact_i2->str() + " (" + dec(*r.exact_i2) + ")" : r.exact_note) + "\n";
      if (r.exact_ikl) s += "exact I_KL = " + bits(*r.exact_ikl) + " bits\n";
      s += "path sum = " + (r.path_sum ? r.path_sum->str() + " (" + dec(*r.path_sum) + ")" : r.path_sum_note) + "\n";
      s += "symmetric percolation = " + bound_text(r.symmetric_percolation, r.symmetric_note) + "\n";
      s += "SDPI percolation = " + bound_text(r.sdpi_percolation, r.sdpi_note) + "\n";
      for (const bounds::EdgeBoundRow& row : r.edges) {
        s += "  edge " + row.id + ": I2 = " + (row.gamma_i2 ? row.gamma_i2->str() : "-") +
             ", eta = " + (row.eta ? dec(*row.eta) : "-") + (row.symmetric ? ", symmetric" : "") + "\n";
      }
      s += "all applicable bounds hold: " + yes_no(r.all_hold()) + "\n";
      out.text = s;
      break;
    }
  }
  return out;
}

Output cmd_sp(const SpArgs& a) {
  const SyncModel model = load(a.c);
  const Endpoints ep = resolve_endpoints(model, a.c);
  const Target t = target_of(model, ep);
  const MultiGraph& g = t.model.graph();
  const auto tree = recognize(g, ep.u, t.vertex);
  std::vector<std::string> paths;
  if (a.paths) {
    for (const sp::Path& p : sp::enumerate_paths(g, ep.u, t.vertex, a.c.budget_paths)) {
      std::vector<std::string> ids;
      for (const std::size_t e : p) ids.push_back(g.edge(e).id);
      paths.push_back(join(ids, " "));
    }
  }
  Output out;
  switch (a.c.format_or(Format::Text)) {
    case Format::Text:
      out.text = (tree ? tree->text() : "not series-parallel") + "\n";
      for (const std::string& p : paths) out.text += "path: " + p + "\n";
      break;
    case Format::Json: {
      ordered_json j;
      j["u"] = g.vertex_name(ep.u);
      j["v"] = g.vertex_name(t.vertex);
      j["series_parallel"] = tree.has_value();
      if (tree) j["tree"] = tree->text();
      if (a.paths) j["paths"] = paths;
      out.text = j.dump(2) + "\n";
      break;
    }
    case Format::Csv: {
      Csv csv("sp");
      csv.row({"u", "v", "series_parallel", "tree", "paths"});
      csv.row({g.vertex_name(ep.u), g.vertex_name(t.vertex), flag(tree.has_value()), tree ? tree->text() : "",
               a.paths ? std::to_string(paths.size()) : ""});
      out.text = csv.str();
      break;
    }
  }
  return out;
}

}  // namespace spinsync::cli
