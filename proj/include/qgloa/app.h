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

#ifndef QGLOA_APP_H
#define QGLOA_APP_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qgloa/circuit.h"
#include "qgloa/fitness.h"
#include "qgloa/gloa.h"
#include "qgloa/targets.h"

namespace qgloa {

/// No arguments, or --help. The message is the usage text.
class UsageError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct RunConfig {
  TargetSpec target;
  int qubits = 0;
  int max_gates = 8;
  std::string gate_set = "default";
  std::string angle_preset = "default";  // default | h2 | custom
  double angle_step = 0.0;               // used by the custom preset
  OptimizerParams optimizer;
  ObjectiveWeights weights;
  int restarts = 1;
  std::string out_path;
  int report_every = 50;
  std::string reevaluate_path;

  CircuitSpace space() const;
};

/// Parses command-line arguments (without the program name). A --config file
/// (INI/TOML "key = value", keys named like the long flags) fills in anything
/// not given on the command line; built-in defaults fill the rest.
/// Throws UsageError or ConfigError.
RunConfig parse_config(const std::vector<std::string>& args);

std::string usage();

struct RunReport {
  RunResult best_run;
  std::uint64_t best_seed = 0;
  int restarts_run = 0;
  double wall_time_s = 0.0;
};

/// Runs the optimizer (cfg.restarts times, seeds seed, seed+1, ...), keeping
/// the run with the lowest objective.
RunReport run_search(const RunConfig& cfg, std::ostream& log);

/// Structured record: target, n, max_gates, seed, params, iterations_run,
/// best_y, best_c, best_cost, genotype, table, then wall_time_s. One JSON
/// object, fields in that order.
std::string format_record(const RunConfig& cfg, const RunReport& report);

/// Runs the search, streams the iteration log to `out`, prints the table and
/// writes the record to cfg.out_path (or `out`). Returns the exit status.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Scores the G/T/C/Q table at cfg.reevaluate_path against cfg's target.
EvaluationResult reevaluate(const RunConfig& cfg);

/// reevaluate() plus printing; returns the exit status.
int execute_reevaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Entry point shared by the CLI binary and tests.
int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

}  // namespace qgloa

#endif  // QGLOA_APP_H
