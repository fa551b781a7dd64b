// Copyright 2026 The Authors.
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

// Command-line front end. Stages mirror the allocation pipeline:
// relatedness (probe logs -> transfer matrix), fit-beta (learning curves ->
// reduction rates), allocate (profile -> label counts) and simulate
// (allocations scored in a synthetic world); `run` chains all four.

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "taba/allocator.hpp"
#include "taba/betafit.hpp"
#include "taba/errors.hpp"
#include "taba/infomodel.hpp"
#include "taba/json_io.hpp"
#include "taba/relatedness.hpp"
#include "taba/simulator.hpp"

namespace taba::cli {
namespace {

namespace fs = std::filesystem;

struct SweepShapeError : Error {
  using Error::Error;
};

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
}

// JSON goes to the file when a path is given, else to stdout.
void emit(const Json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = dump_document(round_floats(doc));
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
  }
}

Eigen::Index infer_task_count(const std::vector<ProbeRecord>& log) {
  Eigen::Index k = 0;
  for (const auto& r : log) k = std::max({k, r.source + 1, r.target + 1});
  return k;
}

// --- relatedness ---------------------------------------------------------

struct RelatednessArgs {
  std::string log_path;
  Eigen::Index num_tasks = 0;
  std::string out_path;
};

Json relatedness_document(const TransferMatrix& m) {
  Json doc = to_json(m);
  const Eigen::VectorXd info = aggregate_informativeness(m);
  doc["informativeness"] = Json::array();
  for (Eigen::Index i = 0; i < info.size(); ++i) doc["informativeness"].push_back(info(i));
  return doc;
}

TransferMatrix do_relatedness(const RelatednessArgs& a, std::ostream& out) {
  const auto log = probe_log_from_json(read_json_file(a.log_path));
  const Eigen::Index k = a.num_tasks > 0 ? a.num_tasks : infer_task_count(log);
  const TransferMatrix m = estimate_transfer(log, k);
  const Eigen::VectorXd info = aggregate_informativeness(m);

  out << "transferred informativeness (row = source, column = target)\n";
  for (Eigen::Index i = 0; i < k; ++i) {
    out << " ";
    for (Eigen::Index j = 0; j < k; ++j) out << ' ' << fmt9(m(i, j));
    out << '\n';
  }
  for (Eigen::Index i = 0; i < k; ++i) out << "I[" << i << "] = " << fmt9(info(i)) << '\n';
  if (!a.out_path.empty()) emit(relatedness_document(m), a.out_path, out);
  return m;
}

// --- fit-beta ------------------------------------------------------------

struct FitBetaArgs {
  std::string curve_path;
  std::string out_path;
};

std::vector<BetaFit> fit_curves(const std::vector<LearningCurve>& curves, std::ostream& out) {
  std::vector<BetaFit> fits;
  for (const auto& c : curves) {
    fits.push_back(fit_reduction_rate(c));
    out << "task '" << c.task << "': beta = " << fmt9(fits.back().beta)
        << ", ds = " << fmt9(fits.back().ds) << ", residual = " << fmt9(fits.back().residual)
        << '\n';
  }
  return fits;
}

void do_fit_beta(const FitBetaArgs& a, std::ostream& out) {
  const Json input = read_json_file(a.curve_path);
  const auto curves = learning_curves_from_json(input);
  const auto fits = fit_curves(curves, out);
  Json doc;
  if (input.is_array()) {
    doc = Json::array();
    for (std::size_t i = 0; i < fits.size(); ++i) doc.push_back(to_json(fits[i], curves[i].task));
  } else {
    doc = to_json(fits.front(), curves.front().task);
  }
  if (!a.out_path.empty()) emit(doc, a.out_path, out);
}

// --- allocate ------------------------------------------------------------

struct SolverArgs {
  std::string solver = "auto";
  Count cell_limit = kDefaultDpCellLimit;
};

void print_allocation(const TaskSet& ts, const InformationProfile& prof, const Allocation& a,
                      std::ostream& out) {
  out << "solver: " << a.solver << '\n';
  out << "task\tcount\tspent\tmarginal_at_stop\n";
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    out << ts.tasks[i].id << '\t' << a.counts(i) << '\t' << a.counts(i) * ts.tasks[i].cost
        << '\t' << fmt9(marginal(prof.informativeness(i), prof.beta(i), a.counts(i))) << '\n';
  }
  out << "total spent: " << a.spent << " of " << ts.budget << '\n';
  out << "objective: " << fmt9(a.objective) << '\n';
  if (a.solver == "greedy") {
    const double bound = continuous_upper_bound(ts, prof);
    out << "upper bound: " << fmt9(bound) << "  gap: " << fmt9(bound - a.objective) << '\n';
  }
  for (const auto& note : a.notes) out << "note: " << note << '\n';
}

Allocation do_allocate(const TaskSet& ts, const InformationProfile& prof, const SolverArgs& s,
                       const std::string& out_path, std::ostream& out) {
  require_compatible(ts, prof);
  const Allocation a = solve(ts, prof, parse_solver_choice(s.solver), s.cell_limit);
  print_allocation(ts, prof, a, out);
  if (!out_path.empty()) emit(to_json(a, ts), out_path, out);
  return a;
}

// --- simulate ------------------------------------------------------------

struct SimulateArgs {
  std::string world_path;
  std::string profile_path;
  std::string out_path;
  std::string csv_path;
  bool sweep = false;
  int sweep_steps = 21;
  std::optional<std::uint64_t> seed;
};

std::string sweep_csv(const std::vector<SweepPoint>& sweep) {
  std::string text = "split_fraction,delta_t\n";
  for (const auto& p : sweep) text += fmt9(p.split_fraction) + "," + fmt9(p.overall_gain) + "\n";
  return text;
}

std::string default_csv_path(const std::string& out_path) {
  if (out_path.empty()) return "sweep.csv";
  fs::path p(out_path);
  return (p.parent_path() / (p.stem().string() + "_sweep.csv")).string();
}

void print_report(const StrategyReport& report, std::ostream& out) {
  out << "strategy\tspent\tobjective\tdelta_t\n";
  for (const auto& row : report.rows) {
    out << row.strategy << '\t' << row.allocation.spent << '\t'
        << fmt9(row.allocation.objective) << '\t' << fmt9(row.overall_gain) << '\n';
  }
}

void simulate_world(SimWorld world, const InformationProfile& prof, const SimulateArgs& a,
                    const SolverArgs& s, std::ostream& out) {
  if (a.seed) world.seed = *a.seed;
  if (a.sweep && world.task_set.size() != 2) {
    throw SweepShapeError("--sweep needs a two-task world, got " +
                          std::to_string(world.task_set.size()) + " tasks");
  }
  CompareOptions options;
  options.solver = parse_solver_choice(s.solver);
  options.dp_cell_limit = s.cell_limit;
  options.sweep_steps = a.sweep ? a.sweep_steps : 0;
  const StrategyReport report = compare_strategies(world, prof, options);
  print_report(report, out);
  emit(to_json(report, world.task_set), a.out_path, out);
  if (a.sweep) {
    const std::string csv = a.csv_path.empty() ? default_csv_path(a.out_path) : a.csv_path;
    write_text(csv, sweep_csv(report.sweep));
    out << "sweep written to " << csv << '\n';
  }
}

void do_simulate(const SimulateArgs& a, const SolverArgs& s, std::ostream& out) {
  const SimWorld world = sim_world_from_json(read_json_file(a.world_path));
  const InformationProfile prof = a.profile_path.empty()
                                      ? true_profile(world)
                                      : profile_from_json(read_json_file(a.profile_path));
  simulate_world(world, prof, a, s, out);
}

// --- run -----------------------------------------------------------------

struct RunArgs {
  std::string tasks_path;
  std::string probes_path;
  std::string curves_path;
  std::string world_path;
  std::string out_dir = "taba_out";
};

void do_run(const RunArgs& r, const SimulateArgs& sim, const SolverArgs& s, std::ostream& out) {
  const TaskSet ts = task_set_from_json(read_json_file(r.tasks_path));
  const fs::path dir(r.out_dir);

  out << "== informativeness\n";
  RelatednessArgs rel{r.probes_path, ts.size(), (dir / "transfer.json").string()};
  const TransferMatrix m = do_relatedness(rel, out);

  out << "== reduction rates\n";
  const auto curves = learning_curves_from_json(read_json_file(r.curves_path));
  std::vector<LearningCurve> ordered;
  for (const auto& task : ts.tasks) {
    auto it = std::find_if(curves.begin(), curves.end(),
                           [&](const LearningCurve& c) { return c.task == task.id; });
    if (it == curves.end()) {
      throw InsufficientDataError("no learning curve for task '" + task.id + "'");
    }
    ordered.push_back(*it);
  }
  const auto fits = fit_curves(ordered, out);
  Json fit_doc = Json::array();
  InformationProfile prof{aggregate_informativeness(m), Eigen::VectorXd(ts.size())};
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    prof.beta(i) = fits[static_cast<std::size_t>(i)].beta;
    fit_doc.push_back(to_json(fits[static_cast<std::size_t>(i)], ts.tasks[i].id));
  }
  emit(fit_doc, (dir / "betas.json").string(), out);
  emit(to_json(prof), (dir / "profile.json").string(), out);

  out << "== allocation\n";
  do_allocate(ts, prof, s, (dir / "allocation.json").string(), out);

  if (!r.world_path.empty()) {
    out << "== simulation\n";
    SimulateArgs a = sim;
    a.out_path = (dir / "report.json").string();
    if (a.csv_path.empty()) a.csv_path = (dir / "sweep.csv").string();
    SimWorld world = sim_world_from_json(read_json_file(r.world_path));
    if (world.task_set.tasks != ts.tasks) {
      throw DomainError("world task list does not match the task set");
    }
    simulate_world(std::move(world), prof, a, s, out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Label-budget allocation for multi-task learning"};
  app.require_subcommand(1);

  std::string out_path;
  std::optional<std::uint64_t> seed;
  SolverArgs solver;
  SimulateArgs sim;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--solver", solver.solver, "auto, dp or greedy")
        ->check(CLI::IsMember({"auto", "dp", "greedy"}));
    cmd->add_option("--dp-cell-limit", solver.cell_limit, "DP work limit in cell updates");
  };
  auto add_sim_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--sweep", sim.sweep, "also sweep two-task budget splits");
    cmd->add_option("--sweep-steps", sim.sweep_steps, "points in the sweep")
        ->check(CLI::Range(2, 100000));
    cmd->add_option("--csv", sim.csv_path, "sweep CSV path");
    cmd->add_option("--seed", seed, "noise seed (overrides the world's)");
  };

  RelatednessArgs rel;
  auto* rel_cmd = app.add_subcommand("relatedness", "estimate the transfer matrix from probe logs");
  rel_cmd->add_option("log", rel.log_path, "probe log JSON")->required();
  rel_cmd->add_option("-k,--num-tasks", rel.num_tasks, "task count (default: from the log)");
  rel_cmd->add_option("--out", out_path, "output JSON path");
  rel_cmd->add_option("--seed", seed, "unused; accepted for uniformity");

  FitBetaArgs fit;
  auto* fit_cmd = app.add_subcommand("fit-beta", "fit reduction rates from learning curves");
  fit_cmd->add_option("curve", fit.curve_path, "learning curve JSON")->required();
  fit_cmd->add_option("--out", out_path, "output JSON path");
  fit_cmd->add_option("--seed", seed, "unused; accepted for uniformity");

  std::string tasks_path;
  std::string profile_path;
  auto* alloc_cmd = app.add_subcommand("allocate", "solve the budget allocation");
  alloc_cmd->add_option("--tasks", tasks_path, "task set JSON")->required();
  alloc_cmd->add_option("--profile", profile_path, "profile JSON (default: from --tasks)");
  alloc_cmd->add_option("--out", out_path, "output JSON path");
  alloc_cmd->add_option("--seed", seed, "unused; accepted for uniformity");
  add_solver_flags(alloc_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "score strategies in a synthetic world");
  sim_cmd->add_option("--world", sim.world_path, "world JSON")->required();
  sim_cmd->add_option("--profile", sim.profile_path, "profile JSON (default: world truth)");
  sim_cmd->add_option("--out", out_path, "report JSON path");
  add_solver_flags(sim_cmd);
  add_sim_flags(sim_cmd);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "run every stage in order");
  run_cmd->add_option("--tasks", run_args.tasks_path, "task set JSON")->required();
  run_cmd->add_option("--probes", run_args.probes_path, "probe log JSON")->required();
  run_cmd->add_option("--curves", run_args.curves_path, "learning curves JSON")->required();
  run_cmd->add_option("--world", run_args.world_path, "world JSON for evaluation");
  run_cmd->add_option("--out", run_args.out_dir, "output directory");
  add_solver_flags(run_cmd);
  add_sim_flags(run_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    sim.seed = seed;
    if (*rel_cmd) {
      rel.out_path = out_path;
      if (out_path.empty()) {
        // Without --out the JSON document alone goes to stdout.
        std::ostream quiet(nullptr);
        emit(relatedness_document(do_relatedness(rel, quiet)), "", out);
      } else {
        do_relatedness(rel, out);
      }
    } else if (*fit_cmd) {
      fit.out_path = out_path;
      do_fit_beta(fit, out);
    } else if (*alloc_cmd) {
      const Json tasks_doc = read_json_file(tasks_path);
      const TaskSet ts = task_set_from_json(tasks_doc);
      const InformationProfile prof = profile_path.empty()
                                          ? profile_from_json(tasks_doc)
                                          : profile_from_json(read_json_file(profile_path));
      do_allocate(ts, prof, solver, out_path, out);
    } else if (*sim_cmd) {
      sim.out_path = out_path;
      do_simulate(sim, solver, out);
    } else if (*run_cmd) {
      do_run(run_args, sim, solver, out);
    }
  } catch (const IncompleteLogError& e) {
    err << "error: " << e.what() << '\n';
    return kIncompleteLog;
  } catch (const InsufficientDataError& e) {
    err << "error: " << e.what() << '\n';
    return kInsufficientData;
  } catch (const DpTooLargeError& e) {
    err << "error: " << e.what() << '\n';
    return kDpTooLarge;
  } catch (const SweepShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kSweepNeedsTwoTasks;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace taba::cli
