// Copyright 2026 The qgloa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgloa/app.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace qgloa {

namespace {

// Raw option storage bound to the CLI11 parser.
struct Options {
  std::string target;
  std::string matrix_file;
  int qubits = 0;
  int max_gates = 8;
  int iterations = 500;
  int groups = 15;
  int group_size = 25;
  double r1 = 0.8, r2 = 0.1, r3 = 0.1;
  int transfers = -1;
  double alpha = 0.9, beta = 0.1;
  std::string angle_preset = "default";
  double angle_step = 0.0;
  std::string gate_set = "default";
  std::uint64_t seed = 1;
  std::string out;
  int report_every = 50;
  int threads = 1;
  int restarts = 1;
  double target_objective = 0.0;
  std::string reevaluate;
};

struct Bound {
  CLI::Option* qubits;
  CLI::Option* transfers;
  CLI::Option* angle_step;
  CLI::Option* target_objective;
};

Bound build_app(CLI::App& app, Options& o) {
  app.add_option("--target", o.target,
                 "Builtin target: toffoli, grover_diffusion, qft, "
                 "teleport_sender, identity");
  app.add_option("--matrix-file", o.matrix_file, "Target unitary from a matrix file");
  Bound b{};
  b.qubits = app.add_option("--qubits", o.qubits, "Qubit count");
  app.add_option("--max-gates", o.max_gates, "Genotype length in gates")->capture_default_str();
  app.add_option("--iterations", o.iterations, "Iterations per run")->capture_default_str();
  app.add_option("--groups", o.groups, "Number of groups")->capture_default_str();
  app.add_option("--group-size", o.group_size, "Members per group")->capture_default_str();
  app.add_option("--r1", o.r1, "Portion kept from the old member")->capture_default_str();
  app.add_option("--r2", o.r2, "Portion taken from the leader")->capture_default_str();
  app.add_option("--r3", o.r3, "Portion drawn at random")->capture_default_str();
  b.transfers = app.add_option("--transfers", o.transfers,
                               "Transfers per group (default 4*max_gates/2-1)");
  app.add_option("--alpha", o.alpha, "Correctness weight")->capture_default_str();
  app.add_option("--beta", o.beta, "Cost weight")->capture_default_str();
  app.add_option("--angle-preset", o.angle_preset, "default | h2 | custom")
      ->capture_default_str();
  b.angle_step = app.add_option("--angle-step", o.angle_step,
                                "Angle step in radians (implies custom preset)");
  app.add_option("--gate-set", o.gate_set,
                 "Comma list, e.g. X,V,Vdag,CX,CV,MCX, or 'default'")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--out", o.out, "Write the structured record to this file");
  app.add_option("--report-every", o.report_every, "Iteration log interval")
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Evaluation worker threads")->capture_default_str();
  app.add_option("--restarts", o.restarts, "Independent runs with seeds seed, seed+1, ...")
      ->capture_default_str();
  b.target_objective = app.add_option("--target-objective", o.target_objective,
                                      "Stop once the best objective is at most this");
  app.add_option("--reevaluate", o.reevaluate,
                 "Score a G/T/C/Q table file against the target instead of searching");
  app.set_config("--config", "", "INI/TOML file with default values for any flag");
  return b;
}

}  // namespace

CircuitSpace RunConfig::space() const {
  CircuitSpace s;
  s.gates = GateSet::parse(gate_set);
  s.qubits = qubits;
  s.max_gates = max_gates;
  if (angle_preset == "default") {
    s.grid = AngleGrid::default_grid();
  } else if (angle_preset == "h2") {
    s.grid = AngleGrid::h2_grid();
  } else if (angle_preset == "custom") {
    s.grid = AngleGrid::with_step(angle_step);
  } else {
    throw ConfigError("unknown angle preset '" + angle_preset + "'");
  }
  return s;
}

std::string usage() {
  CLI::App app{"Decompose a unitary into a low-cost gate sequence with group "
               "leaders optimization.",
               "qgloa"};
  Options o;
  build_app(app, o);
  return app.help();
}

RunConfig parse_config(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError(usage());

  CLI::App app{"qgloa", "qgloa"};
  Options o;
  const Bound bound = build_app(app, o);

  std::vector<std::string> storage = args;
  std::vector<char*> argv;
  static char program[] = "qgloa";
  argv.push_back(program);
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw UsageError(usage());
  } catch (const CLI::ExtrasError& e) {
    throw ConfigError(std::string("unknown flag or argument: ") + e.what());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(std::string("invalid arguments: ") + e.what());
  }

  RunConfig cfg;
  if (o.target.empty() == o.matrix_file.empty()) {
    throw ConfigError("exactly one of --target or --matrix-file is required");
  }
  cfg.target.builtin = o.target;
  cfg.target.path = o.matrix_file;
  if (bound.qubits->count() > 0) cfg.target.qubits = o.qubits;

  const auto implied = implied_qubits(cfg.target);
  if (implied && cfg.target.qubits && *implied != *cfg.target.qubits) {
    throw ConfigError("inconsistent qubit count: target " + cfg.target.describe() +
                      " acts on " + std::to_string(*implied) + " qubits but --qubits is " +
                      std::to_string(*cfg.target.qubits));
  }
  if (!implied && !cfg.target.qubits) {
    throw ConfigError("target " + cfg.target.describe() + " needs --qubits");
  }
  cfg.qubits = implied ? *implied : *cfg.target.qubits;
  cfg.target.qubits = cfg.qubits;
  if (cfg.qubits < 1 || cfg.qubits > 12) {
    throw ConfigError("qubit count must lie in [1, 12]");
  }

  if (o.max_gates < 1) throw ConfigError("--max-gates must be at least 1");
  cfg.max_gates = o.max_gates;
  cfg.gate_set = o.gate_set;
  cfg.angle_preset = bound.angle_step->count() > 0 ? "custom" : o.angle_preset;
  cfg.angle_step = o.angle_step;
  if (cfg.angle_preset == "custom" && bound.angle_step->count() == 0) {
    throw ConfigError("--angle-preset custom needs --angle-step");
  }

  OptimizerParams& p = cfg.optimizer;
  p.num_groups = o.groups;
  p.group_size = o.group_size;
  p.r1 = o.r1;
  p.r2 = o.r2;
  p.r3 = o.r3;
  if (bound.transfers->count() > 0) p.transfers_per_group = o.transfers;
  p.max_iterations = o.iterations;
  p.seed = o.seed;
  if (bound.target_objective->count() > 0) p.target_objective = o.target_objective;
  p.threads = o.threads;
  p.validate();

  cfg.weights = {o.alpha, o.beta};
  cfg.weights.validate();

  if (o.report_every < 1) throw ConfigError("--report-every must be at least 1");
  if (o.restarts < 1) throw ConfigError("--restarts must be at least 1");
  cfg.report_every = o.report_every;
  cfg.restarts = o.restarts;
  cfg.out_path = o.out;
  cfg.reevaluate_path = o.reevaluate;

  cfg.space();  // validates gate set and angle preset
  return cfg;
}

RunReport run_search(const RunConfig& cfg, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  const Evaluator evaluator(cfg.space(), make_target(cfg.target), cfg.weights);

  RunReport report;
  for (int r = 0; r < cfg.restarts; ++r) {
    OptimizerParams params = cfg.optimizer;
    params.seed = cfg.optimizer.seed + static_cast<std::uint64_t>(r);
    log << "# run " << r + 1 << "/" << cfg.restarts << " seed " << params.seed << '\n';
    log << "# iter, best_y, best_c, best_cost\n";
    const int last = params.max_iterations;
    RunResult result = run(evaluator, params, [&](const IterationRecord& rec) {
      if (rec.iter % cfg.report_every == 0 || rec.iter == last) {
        log << format_log_line(rec) << '\n';
      }
      return true;
    });
    ++report.restarts_run;
    if (r == 0 || result.best.y < report.best_run.best.y) {
      report.best_run = std::move(result);
      report.best_seed = params.seed;
    }
    if (cfg.optimizer.target_objective &&
        report.best_run.best.y <= *cfg.optimizer.target_objective) {
      break;
    }
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_record(const RunConfig& cfg, const RunReport& report) {
  const CircuitSpace space = cfg.space();
  const OptimizerParams& p = cfg.optimizer;
  nlohmann::ordered_json j;
  j["target"] = cfg.target.describe();
  j["n"] = cfg.qubits;
  j["max_gates"] = cfg.max_gates;
  j["seed"] = report.best_seed;

  nlohmann::ordered_json params;
  params["num_groups"] = p.num_groups;
  params["group_size"] = p.group_size;
  params["r1"] = p.r1;
  params["r2"] = p.r2;
  params["r3"] = p.r3;
  params["transfers_per_group"] = p.transfers(space);
  params["max_iterations"] = p.max_iterations;
  params["alpha"] = cfg.weights.alpha;
  params["beta"] = cfg.weights.beta;
  params["gate_set"] = space.gates.to_string();
  params["angle_step"] = space.grid.step;
  params["angle_count"] = space.grid.count;
  params["restarts"] = report.restarts_run;
  j["params"] = params;

  const RunResult& best = report.best_run;
  j["iterations_run"] = best.iterations_run;
  j["best_y"] = best.best.y;
  j["best_c"] = best.best.c;
  j["best_cost"] = best.best.cost;
  j["genotype"] = best.best_genotype.to_string();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : best.best.circuit) rows.push_back(render_row(g));
  j["table"] = rows;
  j["wall_time_s"] = report.wall_time_s;
  return j.dump(2) + "\n";
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RunReport report;
  try {
    report = run_search(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << '\n' << render_table(report.best_run.best.circuit);
  out << "# y = " << report.best_run.best.y << ", C = " << report.best_run.best.c
      << ", cost = " << report.best_run.best.cost << '\n';

  const std::string record = format_record(cfg, report);
  if (cfg.out_path.empty()) {
    out << record;
    return 0;
  }
  std::ofstream file(cfg.out_path);
  if (!file) {
    err << "error: cannot open '" << cfg.out_path << "' for writing\n";
    return 2;
  }
  file << record;
  file.close();
  if (!file) {
    err << "error: failed writing '" << cfg.out_path << "'\n";
    return 2;
  }
  return 0;
}

EvaluationResult reevaluate(const RunConfig& cfg) {
  std::ifstream in(cfg.reevaluate_path);
  if (!in) throw ConfigError("cannot open table file '" + cfg.reevaluate_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  const CircuitSpace space = cfg.space();
  Circuit circuit = parse_table(text.str(), cfg.qubits, &space.grid);
  const Evaluator evaluator(space, make_target(cfg.target), cfg.weights);
  return evaluator.evaluate_circuit(std::move(circuit));
}

int execute_reevaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  EvaluationResult r;
  try {
    r = reevaluate(cfg);
  } catch (const std::exception& e) {
    err << "error: " << cfg.reevaluate_path << ": " << e.what() << '\n';
    return 1;
  }
  nlohmann::ordered_json j;
  j["target"] = cfg.target.describe();
  j["n"] = cfg.qubits;
  j["y"] = r.y;
  j["c"] = r.c;
  j["cost"] = r.cost;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& g : r.circuit) rows.push_back(render_row(g));
  j["table"] = rows;
  out << j.dump(2) << '\n';
  return 0;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const UsageError& e) {
    err << e.what();
    return 64;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 64;
  }
  if (!cfg.reevaluate_path.empty()) return execute_reevaluate(cfg, out, err);
  return execute(cfg, out, err);
}

}  // namespace qgloa
