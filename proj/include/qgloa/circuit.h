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

#ifndef QGLOA_CIRCUIT_H
#define QGLOA_CIRCUIT_H

#include <array>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qgloa/gates.h"
#include "qgloa/matrix.h"

namespace qgloa {

enum class Variant { kSingle, kControl, kMulticontrol };

struct GateSetEntry {
  ElementaryGate gate;
  Variant variant = Variant::kSingle;

  bool operator==(const GateSetEntry&) const = default;
};

/// Ordered gate templates. Gene gate ids are 1-based into this list; id 0 is
/// the no-op.
class GateSet {
 public:
  explicit GateSet(std::vector<GateSetEntry> entries);

  /// {X, Y, Z, V, Vdag, Rx, Ry, Rz} as singles (ids 1-8), the same as
  /// controlled gates (ids 9-16), then the multi-control X (id 17).
  static GateSet default_set();

  /// Comma separated list: a bare name is a single gate, a "C" prefix the
  /// controlled variant, "MC" the multi-control variant. "default" selects
  /// default_set(). Throws ConfigError.
  static GateSet parse(std::string_view spec);

  std::size_t size() const { return entries_.size(); }
  const GateSetEntry& at_id(int gate_id) const { return entries_.at(gate_id - 1); }
  std::span<const GateSetEntry> entries() const { return entries_; }

  /// 1-based id of an entry, or 0 when the set does not contain it.
  int id_of(const GateSetEntry& entry) const;

  std::string to_string() const;

 private:
  std::vector<GateSetEntry> entries_;
};

/// Quantized rotation angles k * step for k in [0, count).
struct AngleGrid {
  double step = 0.125 * std::numbers::pi;
  int count = 17;

  double value(int k) const { return k * step; }

  /// Largest grid covering [0, 2 pi] with the given step.
  static AngleGrid with_step(double step);
  static AngleGrid default_grid() { return with_step(0.125 * std::numbers::pi); }
  static AngleGrid h2_grid() { return with_step(0.005); }

  /// Index whose value is within 1e-9 of theta, or -1.
  int index_of(double theta) const;
};

struct Gene {
  int gate_id = 0;
  int target = 1;
  int control = 0;
  int angle_idx = 0;

  static constexpr int kFields = 4;

  int& field(int f);
  int field(int f) const;

  bool operator==(const Gene&) const = default;
};

struct Genotype {
  std::vector<Gene> genes;

  std::size_t num_variables() const { return genes.size() * Gene::kFields; }
  int& variable(std::size_t v) { return genes[v / Gene::kFields].field(v % Gene::kFields); }
  int variable(std::size_t v) const { return genes[v / Gene::kFields].field(v % Gene::kFields); }

  /// "g t c q; g t c q; ..."
  std::string to_string() const;

  bool operator==(const Genotype&) const = default;
};

/// Everything needed to bound and interpret a genotype.
struct CircuitSpace {
  GateSet gates = GateSet::default_set();
  int qubits = 1;
  int max_gates = 8;
  AngleGrid grid = AngleGrid::default_grid();

  /// Inclusive legal range of gene field f.
  int field_min(int f) const;
  int field_max(int f) const;
};

enum class GateKind { kNoop, kSingle, kControl, kMulticontrol };

/// One decoded genotype slot. Qubits are 0-based; control is -1 when unused.
/// theta is 0 for non-rotation gates.
struct DecodedGate {
  GateKind kind = GateKind::kNoop;
  ElementaryGate gate;
  int target = -1;
  int control = -1;
  double theta = 0.0;

  bool is_noop() const { return kind == GateKind::kNoop; }
  bool operator==(const DecodedGate&) const = default;
};

using Circuit = std::vector<DecodedGate>;

/// Throws GenotypeError if any field is out of range.
void validate(const Genotype& g, const CircuitSpace& space);

/// One DecodedGate per gene, noops kept in place.
Circuit decode(const Genotype& g, const CircuitSpace& space);

/// Inverse of decode for circuits whose gates all belong to the space's gate
/// set and grid. Noop slots encode as the all-zero gene with target 1.
Genotype encode(const Circuit& circuit, const CircuitSpace& space);

/// U_k ... U_2 U_1, each gate materialized as a full register matrix through
/// the controlled-gate constructions and Kronecker embedding.
ComplexMatrix circuit_unitary(const Circuit& circuit, int n);

/// Same product as circuit_unitary, accumulated in place by updating pairs of
/// rows. Used on the optimizer's hot path.
ComplexMatrix circuit_unitary_fast(const Circuit& circuit, int n);

/// Row-major 2x2 gate entries {u00, u01, u10, u11}.
using Matrix2 = std::array<Complex, 4>;

Matrix2 to_matrix2(const ComplexMatrix& u);

/// Left-multiplies `acc` by the register matrix of `gate` whose 2x2 base
/// matrix is `u`.
void apply_gate(ComplexMatrix& acc, const DecodedGate& gate, const Matrix2& u,
                int n);

int gate_cost(const DecodedGate& gate);
int circuit_cost(const Circuit& circuit);

/// G/T/C/Q table: a header line followed by one row per slot.
std::string render_table(const Circuit& circuit);
std::string render_row(const DecodedGate& gate);

class TableParseError : public std::runtime_error {
 public:
  TableParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses a G/T/C/Q table (comma or whitespace separated). Blank lines,
/// '#' comments and the header are skipped. Qubit labels must lie in [1, n].
/// When `grid` is given, angles within 1e-9 of a grid value snap to it.
Circuit parse_table(std::string_view text, int n,
                    const AngleGrid* grid = nullptr);

}  // namespace qgloa

#endif  // QGLOA_CIRCUIT_H
