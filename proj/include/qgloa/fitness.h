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

#ifndef QGLOA_FITNESS_H
#define QGLOA_FITNESS_H

#include <vector>

#include "qgloa/circuit.h"
#include "qgloa/matrix.h"

namespace qgloa {

/// Weights of correctness and cost in the objective; alpha + beta == 1.
struct ObjectiveWeights {
  double alpha = 0.9;
  double beta = 0.1;

  /// Throws ConfigError unless both lie in [0, 1] and sum to 1 (within 1e-9).
  void validate() const;
};

struct EvaluationResult {
  double y = 1.0;
  double c = 0.0;
  int cost = 0;
  Circuit circuit;
};

/// |Tr(u_g u_f^dagger)| / N. Insensitive to a global phase on either side.
double correctness(const ComplexMatrix& u_f, const ComplexMatrix& u_g);

/// |1 - (alpha c + beta / cost)|; the cost term is dropped when cost == 0.
double objective(double c, int cost, const ObjectiveWeights& w = {});

/// Scores circuits against one target. Precomputes every 2x2 gate matrix of
/// the space so evaluation only multiplies. Immutable after construction and
/// safe to share between threads.
class Evaluator {
 public:
  Evaluator(CircuitSpace space, ComplexMatrix target, ObjectiveWeights weights);

  const CircuitSpace& space() const { return space_; }
  const ComplexMatrix& target() const { return target_; }
  const ObjectiveWeights& weights() const { return weights_; }

  /// decode -> unitary -> correctness, cost -> objective.
  EvaluationResult evaluate(const Genotype& g) const;

  /// Scores an already decoded circuit. Rotation angles need not lie on the
  /// grid.
  EvaluationResult evaluate_circuit(Circuit circuit) const;

 private:
  const Matrix2& cached(int gate_id, int angle_idx) const;

  CircuitSpace space_;
  ComplexMatrix target_;
  ObjectiveWeights weights_;
  // cache_[gate_id - 1][angle_idx], a single entry for non-rotations.
  std::vector<std::vector<Matrix2>> cache_;
};

/// Convenience wrapper around Evaluator for one-off calls.
EvaluationResult evaluate(const Genotype& g, const ComplexMatrix& target,
                          const CircuitSpace& space,
                          const ObjectiveWeights& weights = {});

}  // namespace qgloa

#endif  // QGLOA_FITNESS_H
