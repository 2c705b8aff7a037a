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

#include <cmath>
#include <string>

namespace qgloa {

void ObjectiveWeights::validate() const {
  if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1) {
    throw ConfigError("objective weights must lie in [0, 1]");
  }
  if (std::abs(alpha + beta - 1.0) > 1e-9) {
    throw ConfigError("objective weights must satisfy alpha + beta = 1");
  }
}

double correctness(const ComplexMatrix& u_f, const ComplexMatrix& u_g) {
  if (u_f.dim() != u_g.dim()) {
    throw DimensionError("correctness: order mismatch (" +
                         std::to_string(u_f.dim()) + " vs " +
                         std::to_string(u_g.dim()) + ")");
  }
  // Tr(u_g u_f^dagger) = sum_ik u_g[i][k] * conj(u_f[i][k]).
  Complex tr{};
  auto f = u_f.data();
  auto g = u_g.data();
  for (std::size_t i = 0; i < f.size(); ++i) tr += g[i] * std::conj(f[i]);
  return std::abs(tr) / static_cast<double>(u_f.dim());
}

double objective(double c, int cost, const ObjectiveWeights& w) {
  const double cost_term = cost > 0 ? w.beta / cost : 0.0;
  return std::abs(1.0 - (w.alpha * c + cost_term));
}

Evaluator::Evaluator(CircuitSpace space, ComplexMatrix target,
                     ObjectiveWeights weights)
    : space_(std::move(space)),
      target_(std::move(target)),
      weights_(weights) {
  weights_.validate();
  if (space_.qubits < 1 || space_.qubits > 12) {
    throw ConfigError("qubit count must lie in [1, 12]");
  }
  if (target_.dim() != (std::size_t{1} << space_.qubits)) {
    throw DimensionError("target order " + std::to_string(target_.dim()) +
                         " does not match " + std::to_string(space_.qubits) +
                         " qubits");
  }
  cache_.reserve(space_.gates.size());
  for (const GateSetEntry& e : space_.gates.entries()) {
    std::vector<Matrix2> per_angle;
    if (e.gate.is_rotation()) {
      per_angle.reserve(space_.grid.count);
      for (int k = 0; k < space_.grid.count; ++k) {
        per_angle.push_back(
            to_matrix2(single_gate_matrix(e.gate, space_.grid.value(k))));
      }
    } else {
      per_angle.push_back(to_matrix2(single_gate_matrix(e.gate, 0.0)));
    }
    cache_.push_back(std::move(per_angle));
  }
}

const Matrix2& Evaluator::cached(int gate_id, int angle_idx) const {
  const auto& per_angle = cache_[gate_id - 1];
  return per_angle.size() == 1 ? per_angle.front() : per_angle[angle_idx];
}

EvaluationResult Evaluator::evaluate(const Genotype& g) const {
  EvaluationResult r;
  r.circuit = decode(g, space_);
  const int n = space_.qubits;
  ComplexMatrix u = ComplexMatrix::identity(target_.dim());
  for (std::size_t i = 0; i < r.circuit.size(); ++i) {
    const DecodedGate& d = r.circuit[i];
    if (d.is_noop()) continue;
    apply_gate(u, d, cached(g.genes[i].gate_id, g.genes[i].angle_idx), n);
  }
  r.c = correctness(u, target_);
  r.cost = circuit_cost(r.circuit);
  r.y = objective(r.c, r.cost, weights_);
  return r;
}

EvaluationResult Evaluator::evaluate_circuit(Circuit circuit) const {
  EvaluationResult r;
  r.circuit = std::move(circuit);
  const ComplexMatrix u = circuit_unitary_fast(r.circuit, space_.qubits);
  r.c = correctness(u, target_);
  r.cost = circuit_cost(r.circuit);
  r.y = objective(r.c, r.cost, weights_);
  return r;
}

EvaluationResult evaluate(const Genotype& g, const ComplexMatrix& target,
                          const CircuitSpace& space,
                          const ObjectiveWeights& weights) {
  return Evaluator(space, target, weights).evaluate(g);
}

}  // namespace qgloa
