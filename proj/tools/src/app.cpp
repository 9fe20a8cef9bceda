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

#include "spinsync_cli/app.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "spinsync/errors.hpp"

namespace spinsync::cli {

namespace {

struct Flags {
  Common common;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<CLI::Option*> seed_opts;
  std::vector<CLI::Option*> trials_opts;
};

void add_model(CLI::App* s, Flags& f, bool required = true) {
  auto* o = s->add_option("--model", f.common.model_path, "Model JSON file");
  if (required) o->required();
}

void add_endpoints(CLI::App* s, Flags& f) {
  s->add_option("--u", f.common.u, "Source vertex (default: first terminal)");
  s->add_option("--v", f.common.v, "Target vertex (default: second terminal)");
  s->add_option("--W", f.common.W, "Comma-separated target vertex set");
}

void add_budgets(CLI::App* s, Flags& f) {
  s->add_option("--budget-states", f.common.budget_states, "Enumeration state cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--budget-paths", f.common.budget_paths, "Path enumeration cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--budget-subsets", f.common.budget_subsets, "Largest edge count for subset enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_rng(CLI::App* s, Flags& f) {
  f.seed_opts.push_back(s->add_option("--seed", f.seed, "Generator seed"));
  f.trials_opts.push_back(s->add_option("--trials", f.trials, "Number of trials"));
}

void add_output(CLI::App* s, Flags& f, bool with_format = true) {
  if (with_format) {
    s->add_option("--format", f.common.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  }
  s->add_option("--out", f.common.out, "Write the result to this file");
}

void add_jobs(CLI::App* s, Flags& f) {
  s->add_option("--jobs", f.common.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact information and percolation bounds for spin synchronization models", "spinsync"};
  app.require_subcommand(1);
  app.footer("Exit status: 0 success, 1 internal error, 2 input error, 3 budget exceeded, 4 check not reproduced.");

  Flags f;
  std::function<Output()> action;

  InfoArgs info;
  auto* s_info = app.add_subcommand("info", "Exact I2 and I_KL of X_u and X_v given the observations");
  add_model(s_info, f);
  add_endpoints(s_info, f);
  add_budgets(s_info, f);
  add_jobs(s_info, f);
  add_output(s_info, f);
  s_info->add_option("--observed", info.observed, "Comma-separated observed edge ids (default: all)");
  s_info->add_option("--mode", info.mode, "exact or collapsed")->check(CLI::IsMember({"exact", "collapsed"}));
  s_info->final_callback([&] {
    action = [&] {
      info.c = f.common;
      return cmd_info(info);
    };
  });

  auto* s_bounds = app.add_subcommand("bounds", "Exact value next to every applicable upper bound");
  add_model(s_bounds, f);
  add_endpoints(s_bounds, f);
  add_budgets(s_bounds, f);
  add_rng(s_bounds, f);
  add_jobs(s_bounds, f);
  add_output(s_bounds, f);
  s_bounds->final_callback([&] { action = [&] { return cmd_bounds(f.common); }; });

  SpArgs sp;
  auto* s_sp = app.add_subcommand("sp", "Series-parallel decomposition between two terminals");
  add_model(s_sp, f);
  add_endpoints(s_sp, f);
  add_budgets(s_sp, f);
  add_output(s_sp, f);
  s_sp->add_flag("--paths", sp.paths, "Also list every self-avoiding path");
  s_sp->final_callback([&] {
    action = [&] {
      sp.c = f.common;
      return cmd_sp(sp);
    };
  });

  auto* s_exp = app.add_subcommand("experiment", "Reproduction experiments");
  s_exp->require_subcommand(1);

  TiedTreeArgs tied;
  auto* s_tied = s_exp->add_subcommand("tied-tree", "Chi-squared path bound against the SDPI union bound");
  s_tied->add_option("--a", tied.a, "Rate a (Q(1|+1) = a/n)")->capture_default_str();
  s_tied->add_option("--b", tied.b, "Rate b (Q(1|-1) = b/n)")->capture_default_str();
  s_tied->add_option("--n", tied.n, "Comma-separated n values")->capture_default_str();
  s_tied->add_option("--depth", tied.depth, "Depths, as 1..4 or a list")->capture_default_str();
  s_tied->add_option("--d", tied.d, "Branching, or n for d = n")->capture_default_str();
  s_tied->add_option("--mode", tied.mode, "analytic, exact or collapsed")
      ->check(CLI::IsMember({"analytic", "exact", "collapsed"}))
      ->capture_default_str();
  add_budgets(s_tied, f);
  add_jobs(s_tied, f);
  add_output(s_tied, f);
  s_tied->final_callback([&] {
    action = [&] {
      tied.c = f.common;
      return cmd_experiment_tied_tree(tied);
    };
  });

  BotArgs bot;
  auto* s_bot = s_exp->add_subcommand("bot", "Broadcast reduction and the subadditivity chain");
  add_model(s_bot, f, false);
  s_bot->add_option("--branching", bot.branching, "Regular tree branching (without --model)")->capture_default_str();
  s_bot->add_option("--depth", bot.depth, "Regular tree depth (without --model)")->capture_default_str();
  s_bot->add_option("--root", bot.root, "Root vertex (default: r, else the first vertex)");
  s_bot->add_option("--W", f.common.W, "Comma-separated targets (default: leaves)");
  s_bot->add_option("--eps", bot.eps, "Comma-separated flip probabilities")->capture_default_str();
  add_budgets(s_bot, f);
  add_output(s_bot, f);
  s_bot->final_callback([&] {
    action = [&] {
      bot.c = f.common;
      return cmd_experiment_bot(bot);
    };
  });

  CounterexampleArgs counter;
  auto* s_counter = s_exp->add_subcommand("counterexamples", "Non-uniform pair and Z/4Z spoon");
  s_counter->add_option("--delta", counter.delta, "Prior P[X = +1] of the pair")->capture_default_str();
  s_counter->add_option("--eps", counter.eps, "Flip probability of the pair")->capture_default_str();
  add_output(s_counter, f);
  s_counter->final_callback([&] {
    action = [&] {
      counter.c = f.common;
      return cmd_experiment_counterexamples(counter);
    };
  });

  InterpolationArgs interp;
  auto* s_interp = s_exp->add_subcommand("interpolation", "Correlation sweep of one BSC edge");
  add_model(s_interp, f);
  add_endpoints(s_interp, f);
  s_interp->add_option("--edge", interp.edge, "Edge id to sweep")->required();
  s_interp->add_option("--grid", interp.grid, "Grid points on [0, 1]")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1001}))
      ->capture_default_str();
  add_budgets(s_interp, f);
  add_output(s_interp, f);
  s_interp->final_callback([&] {
    action = [&] {
      interp.c = f.common;
      return cmd_experiment_interpolation(interp);
    };
  });

  FuzzArgs fuzz;
  auto* s_fuzz = app.add_subcommand("fuzz", "Random search for violations of the open inequalities");
  s_fuzz->add_option("--kind", fuzz.kind, "sp-general or setwise")
      ->check(CLI::IsMember({"sp-general", "setwise"}))
      ->capture_default_str();
  add_rng(s_fuzz, f);
  add_budgets(s_fuzz, f);
  add_jobs(s_fuzz, f);
  add_output(s_fuzz, f);
  s_fuzz->add_option("--max-vertices", fuzz.max_vertices, "Largest random graph")
      ->check(CLI::Range(std::size_t{3}, std::size_t{12}))
      ->capture_default_str();
  s_fuzz->add_option("--max-extra-edges", fuzz.max_extra_edges, "Edges beyond a spanning tree")->capture_default_str();
  s_fuzz->add_option("--max-alphabet", fuzz.max_alphabet, "Largest channel output alphabet")
      ->check(CLI::Range(std::size_t{2}, std::size_t{8}))
      ->capture_default_str();
  s_fuzz->add_flag("--record-all", fuzz.record_all, "Keep non-violating checks in the findings");
  s_fuzz->add_option("--replay", fuzz.replay, "Recompute every finding of this file");
  s_fuzz->final_callback([&] {
    action = [&] {
      fuzz.c = f.common;
      return cmd_fuzz(fuzz);
    };
  });

  MakeArgs make;
  auto* s_make = app.add_subcommand("make", "Write a model file");
  s_make->require_subcommand(1);
  auto* s_bsc = s_make->add_subcommand("bsc-tree", "Regular tree of BSC(eps) edges");
  s_bsc->add_option("--branching", make.branching)->capture_default_str();
  s_bsc->add_option("--depth", make.depth)->capture_default_str();
  s_bsc->add_option("--eps", make.eps)->capture_default_str();
  s_bsc->add_flag("--tie", make.tie, "Tie the leaves to a fresh terminal");
  auto* s_mtied = s_make->add_subcommand("tied-tree", "Regular tree of Bernoulli-pair edges with tied leaves");
  s_mtied->add_option("--branching,--d", make.branching)->capture_default_str();
  s_mtied->add_option("--depth", make.depth)->capture_default_str();
  auto* s_pair = s_make->add_subcommand("bernoulli-pair", "One Bernoulli-pair edge");
  for (CLI::App* s : {s_mtied, s_pair}) {
    s->add_option("--a", make.a)->capture_default_str();
    s->add_option("--b", make.b)->capture_default_str();
    s->add_option("--n", make.n)->capture_default_str();
  }
  for (CLI::App* s : {s_bsc, s_mtied, s_pair}) {
    add_output(s, f, false);
    s->final_callback([&, s] {
      action = [&, s] {
        make.c = f.common;
        make.kind = s->get_name();
        return cmd_make(make);
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  for (const CLI::Option* o : f.seed_opts) {
    if (o->count() > 0) f.common.seed = f.seed;
  }
  for (const CLI::Option* o : f.trials_opts) {
    if (o->count() > 0) f.common.trials = f.trials;
  }

  try {
    const Output result = action();
    if (f.common.out.empty()) {
      out << result.text << std::flush;
    } else {
      std::ofstream file(f.common.out, std::ios::binary);
      file << result.text;
      if (!file) throw InvalidInput("cannot write '" + f.common.out + "'");
    }
    return result.status;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotApplicable& e) {
    err << "not applicable: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace spinsync::cli
