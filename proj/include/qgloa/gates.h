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

#ifndef QGLOA_GATES_H
#define QGLOA_GATES_H

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "qgloa/matrix.h"

namespace qgloa {

enum class BaseGate { X, Y, Z, V, Vdag, Rx, Ry, Rz };

inline constexpr std::array<BaseGate, 8> kAllBaseGates = {
    BaseGate::X,    BaseGate::Y,  BaseGate::Z,  BaseGate::V,
    BaseGate::Vdag, BaseGate::Rx, BaseGate::Ry, BaseGate::Rz};

/// A 2x2 elementary gate. Rotations take an angle, the rest ignore it.
struct ElementaryGate {
  BaseGate kind = BaseGate::X;

  std::string_view name() const;
  bool is_rotation() const;

  bool operator==(const ElementaryGate&) const = default;
};

/// Looks a gate up by its table name ("X", "V", "Vdag", "Rz", ...).
/// Throws ConfigError for unknown names.
ElementaryGate parse_elementary_gate(std::string_view name);

/// 2x2 matrix of `gate`. Rotations use R_a(theta) = cos(theta/2) I -
/// i sin(theta/2) a; V is the square root of X with V V = X.
ComplexMatrix single_gate_matrix(const ElementaryGate& gate, double theta);

/// Positions of a controlled gate inside its local block. Local qubit q sits at
/// bit (d - q) of the block index, so qubit 0 is the most significant bit.
struct LocalPlacement {
  int target = 0;
  int control = 0;

  int d() const { return target > control ? target - control : control - target; }
};

/// Runs the O(2^d) single-control construction on a 2^(d+1) identity.
/// Every block of indices (c + 2k, t + 2k), k = 0..2^(d-1)-1, receives u.
/// Requires min(target, control) == 0 and d >= 1; throws PlacementError
/// otherwise. If `writes` is non-null it is incremented once per entry write.
ComplexMatrix build_single_control(const ComplexMatrix& u,
                                   const LocalPlacement& placement,
                                   std::size_t* writes = nullptr);

/// Constant-time multi-control construction: a single block write at
/// k = 2^(d-1)-1. Every qubit between control and target also controls.
ComplexMatrix build_multi_control(const ComplexMatrix& u,
                                  const LocalPlacement& placement,
                                  std::size_t* writes = nullptr);

/// I_{2^low_qubit} (x) local (x) I_{2^(n - low_qubit - w)} where local has
/// order 2^w. Throws PlacementError if the block does not fit in n qubits.
ComplexMatrix embed_in_register(const ComplexMatrix& local, int low_qubit,
                                int n);

/// Full 2^n register matrix of a controlled gate, built by shifting the pair
/// so that min(target, control) == 0, running the matching construction and
/// embedding the block at the original minimum. Qubits are 0-based.
ComplexMatrix controlled_register_matrix(const ComplexMatrix& u, int target,
                                         int control, bool multi, int n);

/// Full 2^n register matrix of an uncontrolled single-qubit gate.
ComplexMatrix single_register_matrix(const ComplexMatrix& u, int target, int n);

}  // namespace qgloa

#endif  // QGLOA_GATES_H
