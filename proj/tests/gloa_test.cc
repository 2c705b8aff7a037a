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

#include <cmath>

#include "gtest/gtest.h"
#include "qgloa/targets.h"

namespace qgloa {
namespace {

CircuitSpace space_for(int n, int max_gates) {
  CircuitSpace s;
  s.qubits = n;
  s.max_gates = max_gates;
  return s;
}

OptimizerParams small_params(int iterations, std::uint64_t seed) {
  OptimizerParams p;
  p.num_groups = 4;
  p.group_size = 6;
  p.max_iterations = iterations;
  p.seed = seed;
  return p;
}

void expect_leaders_are_minimal(const Population& pop) {
  for (const Group& g : pop.groups) {
    for (const Member& m : g.members) EXPECT_GE(m.result.y, g.leader_member().result.y);
  }
}

TEST(ParamsTest, DefaultsAndValidation) {
  OptimizerParams p;
  EXPECT_EQ(p.num_groups, 15);
  EXPECT_EQ(p.group_size, 25);
  EXPECT_EQ(p.transfers(space_for(3, 8)), 15);
  p.transfers_per_group = 3;
  EXPECT_EQ(p.transfers(space_for(3, 8)), 3);
  EXPECT_NO_THROW(p.validate());
  OptimizerParams bad;
  bad.r1 = 0.5;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = {};
  bad.num_groups = 0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = {};
  bad.r3 = -0.1;
  bad.r1 = 0.9;
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(LogTest, Format) {
  EXPECT_EQ(format_log_line({3, 0.5, 0.25, 7}), "3, 0.5000000000, 0.2500000000, 7");
}

TEST(RandomFieldTest, StaysWithinBounds) {
  const CircuitSpace s = space_for(3, 8);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const Genotype g = random_genotype(s, rng);
    ASSERT_EQ(g.genes.size(), 8u);
    EXPECT_NO_THROW(validate(g, s));
  }
}

TEST(InitTest, LeadersAreGroupMinima) {
  const Evaluator ev(space_for(3, 6), toffoli(), {});
  Rng rng(9);
  const Population pop = init_population(small_params(1, 9), ev, rng);
  EXPECT_EQ(pop.groups.size(), 4u);
  EXPECT_EQ(pop.size(), 24u);
  expect_leaders_are_minimal(pop);
}

TEST(MutateTest, DegenerateRates) {
  const CircuitSpace s = space_for(3, 8);
  Rng rng(1);
  const Genotype old = random_genotype(s, rng);
  const Genotype leader = random_genotype(s, rng);
  OptimizerParams p;
  p.r1 = 1.0, p.r2 = 0.0, p.r3 = 0.0;
  EXPECT_EQ(mutate_member(old, leader, p, s, rng), old);
  p.r1 = 0.0, p.r2 = 1.0;
  EXPECT_EQ(mutate_member(old, leader, p, s, rng), leader);
  p.r2 = 0.0, p.r3 = 1.0;
  for (int i = 0; i < 100; ++i) EXPECT_NO_THROW(validate(mutate_member(old, leader, p, s, rng), s));
}

// Gate-id field: old = 1, leader = 2, 18 possible values. The child keeps the
// old value with probability r1 + r3 / 18.
TEST(MutateTest, SourceFrequenciesMatchRates) {
  const CircuitSpace s = space_for(3, 10);
  Genotype old, leader;
  old.genes.assign(10, Gene{1, 1, 0, 0});
  leader.genes.assign(10, Gene{2, 1, 0, 0});
  const OptimizerParams p;
  Rng rng(77);
  const int draws = 10000;
  long long kept = 0, from_leader = 0, total = 0;
  for (int i = 0; i < draws; ++i) {
    const Genotype child = mutate_member(old, leader, p, s, rng);
    for (const Gene& g : child.genes) {
      kept += g.gate_id == 1;
      from_leader += g.gate_id == 2;
      ++total;
    }
  }
  const double p_old = p.r1 + p.r3 / 18.0;
  const double p_leader = p.r2 + p.r3 / 18.0;
  const double n = static_cast<double>(total);
  EXPECT_NEAR(kept / n, p_old, 3 * std::sqrt(p_old * (1 - p_old) / n));
  EXPECT_NEAR(from_leader / n, p_leader, 3 * std::sqrt(p_leader * (1 - p_leader) / n));
}

TEST(StepTest, MutationSweepNeverWorsensAndKeepsLeaders) {
  const Evaluator ev(space_for(3, 6), toffoli(), {});
  const OptimizerParams p = small_params(1, 4);
  Rng rng(4);
  Population pop = init_population(p, ev, rng);
  for (int it = 0; it < 20; ++it) {
    const Population before = pop;
    mutation_sweep(pop, p, ev, rng);
    for (std::size_t g = 0; g < pop.groups.size(); ++g)
      for (std::size_t m = 0; m < pop.groups[g].members.size(); ++m)
        EXPECT_LE(pop.groups[g].members[m].result.y, before.groups[g].members[m].result.y);
    expect_leaders_are_minimal(pop);
    EXPECT_EQ(pop.size(), before.size());
  }
}

TEST(StepTest, ZeroTransfersIsANoop) {
  const Evaluator ev(space_for(2, 4), grover_diffusion(2), {});
  OptimizerParams p = small_params(1, 2);
  p.transfers_per_group = 0;
  Rng rng(2);
  Population pop = init_population(p, ev, rng);
  const Population before = pop;
  transfer_step(pop, p, ev, rng);
  for (std::size_t g = 0; g < pop.groups.size(); ++g)
    for (std::size_t m = 0; m < pop.groups[g].members.size(); ++m)
      EXPECT_EQ(pop.groups[g].members[m].genotype, before.groups[g].members[m].genotype);
}

TEST(StepTest, TransferChangesAtMostOneVariableAndNeverWorsens) {
  const Evaluator ev(space_for(3, 6), toffoli(), {});
  OptimizerParams p = small_params(1, 3);
  p.transfers_per_group = 1;
  Rng rng(3);
  Population pop = init_population(p, ev, rng);
  for (int it = 0; it < 50; ++it) {
    const Population before = pop;
    transfer_step(pop, p, ev, rng);
    int changed_members = 0;
    for (std::size_t g = 0; g < pop.groups.size(); ++g) {
      int changed_here = 0;
      for (std::size_t m = 0; m < pop.groups[g].members.size(); ++m) {
        const Member& now = pop.groups[g].members[m];
        const Member& was = before.groups[g].members[m];
        EXPECT_LE(now.result.y, was.result.y);
        if (now.genotype == was.genotype) continue;
        ++changed_here;
        int diffs = 0;
        for (int v = 0; v < now.genotype.num_variables(); ++v)
          diffs += now.genotype.variable(v) != was.genotype.variable(v);
        EXPECT_EQ(diffs, 1);
      }
      // One attempt per group, so at most one recipient per group.
      EXPECT_LE(changed_here, 1);
      changed_members += changed_here;
      EXPECT_GE(before.groups[g].leader_member().result.y,
                pop.groups[g].leader_member().result.y);
    }
    EXPECT_LE(changed_members, static_cast<int>(pop.groups.size()));
    expect_leaders_are_minimal(pop);
  }
}

TEST(RunTest, LogIsMonotoneAndDeterministic) {
  const Evaluator ev(space_for(3, 6), toffoli(), {});
  const OptimizerParams p = small_params(40, 12);
  const RunResult a = run(ev, p);
  const RunResult b = run(ev, p);
  ASSERT_EQ(a.log.size(), 41u);
  EXPECT_EQ(a.log.front().iter, 0);
  EXPECT_EQ(a.iterations_run, 40);
  for (std::size_t i = 1; i < a.log.size(); ++i) EXPECT_LE(a.log[i].best_y, a.log[i - 1].best_y);
  EXPECT_EQ(a.log, b.log);
  EXPECT_EQ(a.best_genotype, b.best_genotype);
  EXPECT_EQ(a.best.y, a.log.back().best_y);
  EXPECT_EQ(ev.evaluate(a.best_genotype).y, a.best.y);
}

TEST(RunTest, ThreadCountDoesNotChangeTheRun) {
  const Evaluator ev(space_for(2, 5), grover_diffusion(2), {});
  OptimizerParams p = small_params(15, 21);
  const RunResult one = run(ev, p);
  p.threads = 3;
  const RunResult three = run(ev, p);
  EXPECT_EQ(one.log, three.log);
}

TEST(RunTest, DifferentSeedsDiffer) {
  const Evaluator ev(space_for(3, 6), toffoli(), {});
  const RunResult a = run(ev, small_params(5, 1));
  const RunResult b = run(ev, small_params(5, 2));
  EXPECT_NE(a.best_genotype, b.best_genotype);
}

TEST(RunTest, IdentityTargetReachesNoopFloor) {
  // Only an identity circuit scores C = 1; the empty one does so at y = 0.1.
  const Evaluator ev(space_for(2, 4), ComplexMatrix::identity(4), {});
  const RunResult r = run(ev, small_params(30, 8));
  EXPECT_LE(r.best.y, 0.1 + 1e-12);
  EXPECT_NEAR(r.best.c, 1.0, 1e-12);
}

TEST(RunTest, TargetObjectiveAndCallbackStopEarly) {
  const Evaluator ev(space_for(2, 4), ComplexMatrix::identity(4), {});
  OptimizerParams p = small_params(100, 8);
  p.target_objective = 0.2;
  EXPECT_EQ(run(ev, p).iterations_run, 0);
  p.target_objective.reset();
  int calls = 0;
  const RunResult r = run(ev, p, [&](const IterationRecord& rec) {
    ++calls;
    return rec.iter < 3;
  });
  EXPECT_EQ(r.iterations_run, 3);
  EXPECT_EQ(calls, 4);
}

}  // namespace
}  // namespace qgloa
