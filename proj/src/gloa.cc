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

#include "qgloa/gloa.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

namespace qgloa {

namespace {

// Evaluates genotypes[i] into results[i], splitting the range over threads.
void evaluate_all(const Evaluator& evaluator,
                  const std::vector<Genotype>& genotypes,
                  std::vector<EvaluationResult>& results, int threads) {
  results.resize(genotypes.size());
  const std::size_t n = genotypes.size();
  const std::size_t workers =
      std::clamp<std::size_t>(threads > 0 ? threads : 1, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = evaluator.evaluate(genotypes[i]);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        results[i] = evaluator.evaluate(genotypes[i]);
      }
    });
  }
}

}  // namespace

void OptimizerParams::validate() const {
  if (num_groups < 2) throw ConfigError("need at least 2 groups");
  if (group_size < 1) throw ConfigError("group size must be at least 1");
  if (r1 < 0 || r2 < 0 || r3 < 0) throw ConfigError("rates must be non-negative");
  if (std::abs(r1 + r2 + r3 - 1.0) > 1e-9) {
    throw ConfigError("rates r1 + r2 + r3 must sum to 1");
  }
  if (transfers_per_group && *transfers_per_group < 0) {
    throw ConfigError("transfers per group must be non-negative");
  }
  if (max_iterations < 0) throw ConfigError("iterations must be non-negative");
  if (threads < 1) throw ConfigError("threads must be at least 1");
}

int OptimizerParams::transfers(const CircuitSpace& space) const {
  if (transfers_per_group) return *transfers_per_group;
  return std::max(0, (Gene::kFields * space.max_gates) / 2 - 1);
}

void Group::refresh_leader() {
  leader = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].result.y < members[leader].result.y) leader = i;
  }
}

std::size_t Population::size() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.members.size();
  return total;
}

const Member& Population::best() const {
  const Member* best = &groups.front().leader_member();
  for (const auto& g : groups) {
    if (g.leader_member().result.y < best->result.y) best = &g.leader_member();
  }
  return *best;
}

std::string format_log_line(const IterationRecord& rec) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d, %.10f, %.10f, %d", rec.iter, rec.best_y,
                rec.best_c, rec.best_cost);
  return buf;
}

int random_field(const CircuitSpace& space, int field, Rng& rng) {
  std::uniform_int_distribution<int> dist(space.field_min(field),
                                          space.field_max(field));
  return dist(rng);
}

Genotype random_genotype(const CircuitSpace& space, Rng& rng) {
  Genotype g;
  g.genes.resize(space.max_gates);
  for (Gene& gene : g.genes) {
    for (int f = 0; f < Gene::kFields; ++f) gene.field(f) = random_field(space, f, rng);
  }
  return g;
}

Population init_population(const OptimizerParams& params,
                           const Evaluator& evaluator, Rng& rng) {
  params.validate();
  std::vector<Genotype> genotypes;
  genotypes.reserve(static_cast<std::size_t>(params.num_groups) * params.group_size);
  for (int i = 0; i < params.num_groups * params.group_size; ++i) {
    genotypes.push_back(random_genotype(evaluator.space(), rng));
  }
  std::vector<EvaluationResult> results;
  evaluate_all(evaluator, genotypes, results, params.threads);

  Population pop;
  pop.groups.resize(params.num_groups);
  std::size_t k = 0;
  for (Group& group : pop.groups) {
    group.members.reserve(params.group_size);
    for (int m = 0; m < params.group_size; ++m, ++k) {
      group.members.push_back({std::move(genotypes[k]), std::move(results[k])});
    }
    group.refresh_leader();
  }
  return pop;
}

Genotype mutate_member(const Genotype& old, const Genotype& leader,
                       const OptimizerParams& params, const CircuitSpace& space,
                       Rng& rng) {
  if (old.genes.size() != leader.genes.size()) {
    throw GenotypeError("mutate_member: genotype lengths differ");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Genotype out = old;
  for (std::size_t v = 0; v < out.num_variables(); ++v) {
    const double u = unit(rng);
    if (u < params.r1) continue;
    if (u < params.r1 + params.r2) {
      out.variable(v) = leader.variable(v);
    } else {
      out.variable(v) = random_field(space, static_cast<int>(v % Gene::kFields), rng);
    }
  }
  return out;
}

void mutation_sweep(Population& pop, const OptimizerParams& params,
                    const Evaluator& evaluator, Rng& rng) {
  std::vector<Genotype> candidates;
  candidates.reserve(pop.size());
  for (const Group& group : pop.groups) {
    const Genotype& leader = group.leader_member().genotype;
    for (const Member& m : group.members) {
      candidates.push_back(
          mutate_member(m.genotype, leader, params, evaluator.space(), rng));
    }
  }
  std::vector<EvaluationResult> results;
  evaluate_all(evaluator, candidates, results, params.threads);

  std::size_t k = 0;
  for (Group& group : pop.groups) {
    for (Member& m : group.members) {
      if (results[k].y < m.result.y) {
        m.genotype = std::move(candidates[k]);
        m.result = std::move(results[k]);
      }
      ++k;
    }
    group.refresh_leader();
  }
}

void transfer_step(Population& pop, const OptimizerParams& params,
                   const Evaluator& evaluator, Rng& rng) {
  const int transfers = params.transfers(evaluator.space());
  const std::size_t num_groups = pop.groups.size();
  if (num_groups < 2 || transfers == 0) return;

  for (std::size_t gi = 0; gi < num_groups; ++gi) {
    Group& group = pop.groups[gi];
    for (int t = 0; t < transfers; ++t) {
      std::uniform_int_distribution<std::size_t> pick_member(0, group.members.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_group(0, num_groups - 2);
      Member& member = group.members[pick_member(rng)];
      std::size_t donor_group = pick_group(rng);
      if (donor_group >= gi) ++donor_group;
      const Group& donors = pop.groups[donor_group];
      std::uniform_int_distribution<std::size_t> pick_donor(0, donors.members.size() - 1);
      const Member& donor = donors.members[pick_donor(rng)];
      std::uniform_int_distribution<std::size_t> pick_var(
          0, member.genotype.num_variables() - 1);
      const std::size_t v = pick_var(rng);

      if (member.genotype.variable(v) == donor.genotype.variable(v)) continue;
      Genotype candidate = member.genotype;
      candidate.variable(v) = donor.genotype.variable(v);
      EvaluationResult result = evaluator.evaluate(candidate);
      if (result.y < member.result.y) {
        member.genotype = std::move(candidate);
        member.result = std::move(result);
      }
    }
    group.refresh_leader();
  }
}

RunResult run(const Evaluator& evaluator, const OptimizerParams& params,
              const IterationCallback& on_iteration) {
  params.validate();
  Rng rng(params.seed);
  Population pop = init_population(params, evaluator, rng);

  RunResult out;
  const auto record = [&](int iter) {
    const Member& best = pop.best();
    IterationRecord rec{iter, best.result.y, best.result.c, best.result.cost};
    out.log.push_back(rec);
    const bool keep_going = !on_iteration || on_iteration(rec);
    const bool reached = params.target_objective && rec.best_y <= *params.target_objective;
    return keep_going && !reached;
  };

  bool keep_going = record(0);
  for (int iter = 1; keep_going && iter <= params.max_iterations; ++iter) {
    mutation_sweep(pop, params, evaluator, rng);
    transfer_step(pop, params, evaluator, rng);
    out.iterations_run = iter;
    keep_going = record(iter);
  }

  const Member& best = pop.best();
  out.best_genotype = best.genotype;
  out.best = best.result;
  return out;
}

}  // namespace qgloa
