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

#include "qgloa/fitness.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qgloa/gloa.h"
#include "qgloa/targets.h"

namespace qgloa {
namespace {

CircuitSpace space_for(int n, int max_gates) {
  CircuitSpace s;
  s.qubits = n;
  s.max_gates = max_gates;
  return s;
}

TEST(ObjectiveTest, Examples) {
  EXPECT_NEAR(objective(1.0, 12), 0.0916667, 1e-7);
  EXPECT_NEAR(objective(1.0, 14), 0.0928571, 1e-7);
  EXPECT_NEAR(objective(1.0, 0), 0.1, 1e-15);
  EXPECT_NEAR(objective(0.5, 2), 0.5, 1e-15);
  EXPECT_NEAR(objective(1.0, 1), 0.0, 1e-15);
  EXPECT_NEAR(objective(1.0, 2, ObjectiveWeights{0.5, 0.5}), 0.25, 1e-15);
}

TEST(ObjectiveTest, WeightsAreValidated) {
  EXPECT_THROW((ObjectiveWeights{0.8, 0.1}.validate()), ConfigError);
  EXPECT_THROW((ObjectiveWeights{1.2, -0.2}.validate()), ConfigError);
  EXPECT_NO_THROW((ObjectiveWeights{1.0, 0.0}.validate()));
}

TEST(CorrectnessTest, Examples) {
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  EXPECT_NEAR(correctness(i4, i4), 1.0, 1e-15);
  EXPECT_NEAR(correctness(i4, i4 * Complex(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(correctness(kron(oracle::pauli_x(), ComplexMatrix::identity(2)), i4), 0.0,
              1e-15);
  EXPECT_NEAR(correctness(toffoli(), ComplexMatrix::identity(8)), 0.75, 1e-15);
  EXPECT_THROW(correctness(i4, ComplexMatrix::identity(2)), DimensionError);
}

TEST(EvaluateTest, AllNoopAgainstIdentity) {
  const CircuitSpace s = space_for(2, 8);
  Genotype g;
  g.genes.assign(8, Gene{0, 1, 0, 0});
  const EvaluationResult r = evaluate(g, ComplexMatrix::identity(4), s);
  EXPECT_NEAR(r.c, 1.0, 1e-15);
  EXPECT_EQ(r.cost, 0);
  EXPECT_NEAR(r.y, 0.1, 1e-15);
}

TEST(EvaluateTest, AllNoopAgainstToffoli) {
  const CircuitSpace s = space_for(3, 8);
  Genotype g;
  g.genes.assign(8, Gene{0, 1, 0, 0});
  const EvaluationResult r = evaluate(g, toffoli(), s);
  EXPECT_NEAR(r.c, 0.75, 1e-15);
  EXPECT_NEAR(r.y, 1.0 - 0.9 * 0.75, 1e-15);
}

TEST(EvaluateTest, GroverCircuitOfCostSeven) {
  const CircuitSpace s = space_for(2, 5);
  // CX(1->2), V(2), V(1), CX(1->2), V(1)
  Genotype g{{Gene{9, 2, 1, 0}, Gene{4, 2, 0, 0}, Gene{4, 1, 0, 0}, Gene{9, 2, 1, 0},
              Gene{4, 1, 0, 0}}};
  const EvaluationResult r = evaluate(g, grover_diffusion(2), s);
  EXPECT_NEAR(r.c, 1.0, 1e-12);
  EXPECT_EQ(r.cost, 7);
  EXPECT_NEAR(r.y, 0.08571, 5e-5);
}

TEST(EvaluateTest, RejectsBadSetup) {
  EXPECT_THROW(Evaluator(space_for(2, 4), ComplexMatrix::identity(8), {}), DimensionError);
  EXPECT_THROW(Evaluator(space_for(13, 4), ComplexMatrix::identity(2), {}), ConfigError);
  EXPECT_THROW(Evaluator(space_for(2, 4), ComplexMatrix::identity(4), {0.5, 0.1}),
               ConfigError);
}

TEST(CorrectnessPropertyTest, RangeSymmetryAndPhase) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0, 6.283185307179586);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = std::size_t{1} << (1 + trial % 4);
    const ComplexMatrix a = oracle::random_unitary(dim, rng);
    const ComplexMatrix b = oracle::random_unitary(dim, rng);
    const double c = correctness(a, b);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0 + 1e-12);
    EXPECT_NEAR(correctness(b, a), c, 1e-12);
    EXPECT_NEAR(correctness(a, b * std::polar(1.0, angle(rng))), c, 1e-12);
    EXPECT_NEAR(correctness(a, a * std::polar(1.0, angle(rng))), 1.0, 1e-12);
  }
}

TEST(ObjectivePropertyTest, MonotoneInCorrectnessAndCost) {
  for (int cost = 1; cost <= 60; ++cost) {
    for (double c = 0.0; c < 0.95; c += 0.05) {
      EXPECT_GT(objective(c, cost), objective(c + 0.05, cost));
      // With C near 1, a cheaper circuit is never worse.
      EXPECT_LE(objective(1.0, cost), objective(1.0, cost + 1));
    }
  }
}

TEST(EvaluatePropertyTest, PureAndMatchesReferenceRoute) {
  Rng rng(5);
  for (int n = 1; n <= 4; ++n) {
    const CircuitSpace s = space_for(n, 8);
    const ComplexMatrix target = oracle::random_unitary(std::size_t{1} << n, rng);
    const Evaluator ev(s, target, {});
    for (int trial = 0; trial < 50; ++trial) {
      const Genotype g = random_genotype(s, rng);
      const EvaluationResult a = ev.evaluate(g);
      const EvaluationResult b = ev.evaluate(g);
      EXPECT_EQ(a.y, b.y);
      EXPECT_EQ(a.c, b.c);
      const Circuit c = decode(g, s);
      EXPECT_NEAR(a.c, correctness(target, circuit_unitary(c, n)), 1e-12);
      EXPECT_EQ(a.cost, circuit_cost(c));
      EXPECT_NEAR(a.y, objective(a.c, a.cost), 1e-15);
    }
  }
}

}  // namespace
}  // namespace qgloa
