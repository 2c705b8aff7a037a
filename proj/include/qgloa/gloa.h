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

// Group leaders optimization over circuit genotypes.
//
// The population is split into disjoint groups, each led by its best member.
// Every iteration each member is recombined field by field from itself, its
// leader and fresh random values; then each group receives single-variable
// transfers from members of other groups. Both steps keep a candidate only if
// it strictly improves the objective.

#ifndef QGLOA_GLOA_H
#define QGLOA_GLOA_H

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qgloa/circuit.h"
#include "qgloa/fitness.h"

namespace qgloa {

using Rng = std::mt19937_64;

struct OptimizerParams {
  int num_groups = 15;
  int group_size = 25;
  double r1 = 0.8;  // keep from the old member
  double r2 = 0.1;  // take from the leader
  double r3 = 0.1;  // draw at random
  // Defaults to num_variables / 2 - 1 with num_variables = 4 * max_gates.
  std::optional<int> transfers_per_group;
  int max_iterations = 500;
  std::uint64_t seed = 1;
  std::optional<double> target_objective;
  // Worker threads for candidate evaluation. Results do not depend on it.
  int threads = 1;

  /// Throws ConfigError on invalid settings.
  void validate() const;
  int transfers(const CircuitSpace& space) const;
};

struct Member {
  Genotype genotype;
  EvaluationResult result;
};

struct Group {
  std::vector<Member> members;
  std::size_t leader = 0;

  const Member& leader_member() const { return members[leader]; }
  /// Points `leader` at the first member with minimal y.
  void refresh_leader();
};

struct Population {
  std::vector<Group> groups;

  std::size_t size() const;
  const Member& best() const;
};

struct IterationRecord {
  int iter = 0;
  double best_y = 0;
  double best_c = 0;
  int best_cost = 0;

  bool operator==(const IterationRecord&) const = default;
};

/// "iter, best_y, best_c, best_cost"
std::string format_log_line(const IterationRecord& rec);

struct RunResult {
  Genotype best_genotype;
  EvaluationResult best;
  std::vector<IterationRecord> log;
  int iterations_run = 0;
};

/// Called after initialization (iter 0) and after every iteration. Returning
/// false stops the run after the current iteration.
using IterationCallback = std::function<bool(const IterationRecord&)>;

int random_field(const CircuitSpace& space, int field, Rng& rng);
Genotype random_genotype(const CircuitSpace& space, Rng& rng);

Population init_population(const OptimizerParams& params,
                           const Evaluator& evaluator, Rng& rng);

/// Each gene field independently comes from `old` with probability r1, from
/// `leader` with probability r2, or is redrawn with probability r3.
Genotype mutate_member(const Genotype& old, const Genotype& leader,
                       const OptimizerParams& params, const CircuitSpace& space,
                       Rng& rng);

/// Mutates every member against its group's current leader and keeps strict
/// improvements. Candidates are drawn sequentially, so the outcome depends
/// only on the rng state, not on params.threads.
void mutation_sweep(Population& pop, const OptimizerParams& params,
                    const Evaluator& evaluator, Rng& rng);

/// One-way parameter transfer: per group, transfers(space) attempts that copy
/// one variable from a random member of another group into a random member
/// of this group, kept on strict improvement. Donors are never modified.
void transfer_step(Population& pop, const OptimizerParams& params,
                   const Evaluator& evaluator, Rng& rng);

RunResult run(const Evaluator& evaluator, const OptimizerParams& params,
              const IterationCallback& on_iteration = {});

}  // namespace qgloa

#endif  // QGLOA_GLOA_H
