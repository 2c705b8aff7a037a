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

#include "qgloa/gates.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qgloa {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_local(const ComplexMatrix& u, const LocalPlacement& p,
                 const char* who) {
  if (u.dim() != 2) {
    throw DimensionError(std::string(who) + ": gate must be 2x2");
  }
  if (p.target < 0 || p.control < 0 || std::min(p.target, p.control) != 0) {
    throw PlacementError(std::string(who) +
                         ": placement must have min(target, control) == 0");
  }
  if (p.d() == 0) {
    throw PlacementError(std::string(who) + ": control equals target");
  }
  if (p.d() > 30) {
    throw PlacementError(std::string(who) + ": span too wide");
  }
}

// Block at indices (i, j) where i has the target qubit set and j has it clear.
// Entries are oriented so u acts as written on (|0>, |1>) of the target.
void write_block(ComplexMatrix& m, const ComplexMatrix& u, std::size_t i,
                 std::size_t j, std::size_t* writes) {
  m(j, j) = u(0, 0);
  m(j, i) = u(0, 1);
  m(i, j) = u(1, 0);
  m(i, i) = u(1, 1);
  if (writes) *writes += 4;
}

}  // namespace

std::string_view ElementaryGate::name() const {
  switch (kind) {
    case BaseGate::X: return "X";
    case BaseGate::Y: return "Y";
    case BaseGate::Z: return "Z";
    case BaseGate::V: return "V";
    case BaseGate::Vdag: return "Vdag";
    case BaseGate::Rx: return "Rx";
    case BaseGate::Ry: return "Ry";
    case BaseGate::Rz: return "Rz";
  }
  return "?";
}

bool ElementaryGate::is_rotation() const {
  return kind == BaseGate::Rx || kind == BaseGate::Ry || kind == BaseGate::Rz;
}

ElementaryGate parse_elementary_gate(std::string_view name) {
  for (BaseGate g : kAllBaseGates) {
    if (ElementaryGate{g}.name() == name) return ElementaryGate{g};
  }
  throw ConfigError("unknown gate name '" + std::string(name) + "'");
}

ComplexMatrix single_gate_matrix(const ElementaryGate& gate, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  switch (gate.kind) {
    case BaseGate::X: return {{0, 1}, {1, 0}};
    case BaseGate::Y: return {{0, -kI}, {kI, 0}};
    case BaseGate::Z: return {{1, 0}, {0, -1}};
    case BaseGate::V:
      return {{Complex(0.5, 0.5), Complex(0.5, -0.5)},
              {Complex(0.5, -0.5), Complex(0.5, 0.5)}};
    case BaseGate::Vdag:
      return {{Complex(0.5, -0.5), Complex(0.5, 0.5)},
              {Complex(0.5, 0.5), Complex(0.5, -0.5)}};
    case BaseGate::Rx: return {{c, -kI * s}, {-kI * s, c}};
    case BaseGate::Ry: return {{c, -s}, {s, c}};
    case BaseGate::Rz: return {{Complex(c, -s), 0}, {0, Complex(c, s)}};
  }
  throw ConfigError("unknown gate kind");
}

ComplexMatrix build_single_control(const ComplexMatrix& u,
                                   const LocalPlacement& placement,
                                   std::size_t* writes) {
  check_local(u, placement, "build_single_control");
  const int d = placement.d();
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << (d + 1));
  const std::size_t t = std::size_t{1} << placement.target;
  const std::size_t c = t + (std::size_t{1} << placement.control);
  const std::size_t last = (std::size_t{1} << (d - 1)) - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    write_block(m, u, c + 2 * k, t + 2 * k, writes);
  }
  return m;
}

ComplexMatrix build_multi_control(const ComplexMatrix& u,
                                  const LocalPlacement& placement,
                                  std::size_t* writes) {
  check_local(u, placement, "build_multi_control");
  const int d = placement.d();
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << (d + 1));
  const std::size_t t = std::size_t{1} << placement.target;
  const std::size_t c = t + (std::size_t{1} << placement.control);
  const std::size_t last = (std::size_t{1} << (d - 1)) - 1;
  write_block(m, u, c + 2 * last, t + 2 * last, writes);
  return m;
}

ComplexMatrix embed_in_register(const ComplexMatrix& local, int low_qubit,
                                int n) {
  const std::size_t dim = local.dim();
  int width = 0;
  while ((std::size_t{1} << width) < dim) ++width;
  if ((std::size_t{1} << width) != dim) {
    throw DimensionError("embed_in_register: local order is not a power of 2");
  }
  if (low_qubit < 0 || n < 1 || low_qubit + width > n) {
    throw PlacementError("embed_in_register: block at qubit " +
                         std::to_string(low_qubit) + " of width " +
                         std::to_string(width) + " exceeds " +
                         std::to_string(n) + "-qubit register");
  }
  const int below = n - low_qubit - width;
  ComplexMatrix out = local;
  if (low_qubit > 0) {
    out = kron(ComplexMatrix::identity(std::size_t{1} << low_qubit), out);
  }
  if (below > 0) {
    out = kron(out, ComplexMatrix::identity(std::size_t{1} << below));
  }
  return out;
}

ComplexMatrix controlled_register_matrix(const ComplexMatrix& u, int target,
                                         int control, bool multi, int n) {
  if (target < 0 || control < 0 || target >= n || control >= n) {
    throw PlacementError("controlled gate outside the register");
  }
  const int low = std::min(target, control);
  const LocalPlacement local{target - low, control - low};
  const ComplexMatrix block =
      multi ? build_multi_control(u, local) : build_single_control(u, local);
  return embed_in_register(block, low, n);
}

ComplexMatrix single_register_matrix(const ComplexMatrix& u, int target,
                                     int n) {
  return embed_in_register(u, target, n);
}

}  // namespace qgloa
