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

#ifndef QGLOA_TARGETS_H
#define QGLOA_TARGETS_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qgloa/matrix.h"

namespace qgloa {

/// Identity except |110> and |111> exchanged: qubits 1 and 2 control, 3 is
/// the target.
ComplexMatrix toffoli();

/// 2|s><s| - I with |s> the uniform superposition over n qubits.
ComplexMatrix grover_diffusion(int n);

/// F[j][k] = exp(2 pi i j k / N) / sqrt(N).
ComplexMatrix qft(int n);

/// Bell-basis change on qubits 1 and 2 of a 3-qubit register: CNOT (control 1,
/// target 2) followed by H on qubit 1, identity on qubit 3.
ComplexMatrix teleport_sender();

class MatrixFileError : public std::runtime_error {
 public:
  enum class Kind { kIo, kParse, kNotSquare, kNotPowerOfTwo, kNotUnitary };

  MatrixFileError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Text format: first non-comment line holds N, then N rows of N
/// whitespace-separated "re,im" entries. Lines starting with '#' are ignored.
/// The result must have power-of-two order and be unitary within 1e-8.
ComplexMatrix parse_matrix_text(std::string_view text);
ComplexMatrix load_matrix_file(const std::string& path);

/// Writes `m` in the format read by parse_matrix_text, with round-trip
/// precision.
std::string format_matrix_text(const ComplexMatrix& m);
void save_matrix_file(const std::string& path, const ComplexMatrix& m);

/// Either a builtin name (toffoli, grover_diffusion, qft, teleport_sender,
/// identity) or a matrix file.
struct TargetSpec {
  std::string builtin;
  std::string path;
  std::optional<int> qubits;

  std::string describe() const;
};

/// Qubit count implied by the spec, if any: fixed for toffoli and
/// teleport_sender, read from the file for matrix files.
std::optional<int> implied_qubits(const TargetSpec& spec);

/// Builds or loads the target. Throws ConfigError for unknown builtins or an
/// inconsistent qubit count.
ComplexMatrix make_target(const TargetSpec& spec);

}  // namespace qgloa

#endif  // QGLOA_TARGETS_H
