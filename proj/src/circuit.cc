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

#include "qgloa/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace qgloa {

namespace {

constexpr std::string_view kTableHeader = "G, T, C, Q";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view variant_word(Variant v) {
  switch (v) {
    case Variant::kSingle: return "Single";
    case Variant::kControl: return "Control";
    case Variant::kMulticontrol: return "Multicontrol";
  }
  return "?";
}

Variant kind_variant(GateKind k) {
  switch (k) {
    case GateKind::kControl: return Variant::kControl;
    case GateKind::kMulticontrol: return Variant::kMulticontrol;
    default: return Variant::kSingle;
  }
}

std::string format_angle(double theta) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), theta);
  return std::string(buf, end);
}

}  // namespace

// ---------------------------------------------------------------------------
// GateSet

GateSet::GateSet(std::vector<GateSetEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw ConfigError("gate set must not be empty");
}

GateSet GateSet::default_set() {
  std::vector<GateSetEntry> entries;
  for (BaseGate g : kAllBaseGates) entries.push_back({{g}, Variant::kSingle});
  for (BaseGate g : kAllBaseGates) entries.push_back({{g}, Variant::kControl});
  entries.push_back({{BaseGate::X}, Variant::kMulticontrol});
  return GateSet(std::move(entries));
}

GateSet GateSet::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec == "default") return default_set();
  std::vector<GateSetEntry> entries;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    std::string_view token = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (token.empty()) throw ConfigError("gate set: empty entry");
    Variant variant = Variant::kSingle;
    if (token.starts_with("MC")) {
      variant = Variant::kMulticontrol;
      token.remove_prefix(2);
    } else if (token.starts_with("C")) {
      variant = Variant::kControl;
      token.remove_prefix(1);
    }
    entries.push_back({parse_elementary_gate(token), variant});
  }
  return GateSet(std::move(entries));
}

int GateSet::id_of(const GateSetEntry& entry) const {
  auto it = std::find(entries_.begin(), entries_.end(), entry);
  return it == entries_.end() ? 0 : static_cast<int>(it - entries_.begin()) + 1;
}

std::string GateSet::to_string() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ',';
    if (e.variant == Variant::kControl) out += 'C';
    if (e.variant == Variant::kMulticontrol) out += "MC";
    out += e.gate.name();
  }
  return out;
}

// ---------------------------------------------------------------------------
// AngleGrid / Gene / Genotype

AngleGrid AngleGrid::with_step(double step) {
  if (!(step > 0.0)) throw ConfigError("angle step must be positive");
  const double two_pi = 2.0 * std::numbers::pi;
  int count = static_cast<int>(std::floor(two_pi / step + 1e-9)) + 1;
  // Keep every value inside [0, 2 pi] even when the division rounded up.
  while (count > 1 && (count - 1) * step > two_pi + 1e-12) --count;
  return AngleGrid{step, count};
}

int AngleGrid::index_of(double theta) const {
  const double k = std::round(theta / step);
  if (k < 0 || k >= count) return -1;
  const int idx = static_cast<int>(k);
  return std::abs(value(idx) - theta) <= 1e-9 ? idx : -1;
}

int& Gene::field(int f) {
  switch (f) {
    case 0: return gate_id;
    case 1: return target;
    case 2: return control;
    default: return angle_idx;
  }
}

int Gene::field(int f) const { return const_cast<Gene*>(this)->field(f); }

std::string Genotype::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < genes.size(); ++i) {
    const Gene& g = genes[i];
    os << (i ? "; " : "") << g.gate_id << ' ' << g.target << ' ' << g.control
       << ' ' << g.angle_idx;
  }
  return os.str();
}

int CircuitSpace::field_min(int f) const { return f == 1 ? 1 : 0; }

int CircuitSpace::field_max(int f) const {
  switch (f) {
    case 0: return static_cast<int>(gates.size());
    case 1: return qubits;
    case 2: return qubits;
    default: return grid.count - 1;
  }
}

// ---------------------------------------------------------------------------
// decode / encode

void validate(const Genotype& g, const CircuitSpace& space) {
  for (std::size_t i = 0; i < g.genes.size(); ++i) {
    for (int f = 0; f < Gene::kFields; ++f) {
      const int v = g.genes[i].field(f);
      // The all-zero gene is accepted as a no-op spelling.
      const bool zero_noop = f == 1 && v == 0 && g.genes[i].gate_id == 0;
      if (!zero_noop && (v < space.field_min(f) || v > space.field_max(f))) {
        static constexpr const char* kNames[] = {"gate", "target", "control",
                                                 "angle"};
        throw GenotypeError("gene " + std::to_string(i + 1) + ": " +
                            kNames[f] + " field " + std::to_string(v) +
                            " outside [" + std::to_string(space.field_min(f)) +
                            ", " + std::to_string(space.field_max(f)) + "]");
      }
    }
  }
}

Circuit decode(const Genotype& g, const CircuitSpace& space) {
  validate(g, space);
  Circuit out;
  out.reserve(g.genes.size());
  for (const Gene& gene : g.genes) {
    DecodedGate d;
    if (gene.gate_id != 0) {
      const GateSetEntry& entry = space.gates.at_id(gene.gate_id);
      const bool controlled = entry.variant != Variant::kSingle;
      if (!controlled || (gene.control != 0 && gene.control != gene.target)) {
        d.gate = entry.gate;
        d.target = gene.target - 1;
        switch (entry.variant) {
          case Variant::kSingle: d.kind = GateKind::kSingle; break;
          case Variant::kControl: d.kind = GateKind::kControl; break;
          case Variant::kMulticontrol: d.kind = GateKind::kMulticontrol; break;
        }
        d.control = controlled ? gene.control - 1 : -1;
        d.theta = entry.gate.is_rotation() ? space.grid.value(gene.angle_idx) : 0.0;
      }
    }
    out.push_back(d);
  }
  return out;
}

Genotype encode(const Circuit& circuit, const CircuitSpace& space) {
  Genotype g;
  g.genes.reserve(circuit.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const DecodedGate& d = circuit[i];
    Gene gene;
    if (!d.is_noop()) {
      gene.gate_id = space.gates.id_of({d.gate, kind_variant(d.kind)});
      if (gene.gate_id == 0) {
        throw GenotypeError("slot " + std::to_string(i + 1) + ": gate '" +
                            std::string(d.gate.name()) +
                            "' is not in the gate set");
      }
      gene.target = d.target + 1;
      gene.control = d.kind == GateKind::kSingle ? 0 : d.control + 1;
      if (d.gate.is_rotation()) {
        gene.angle_idx = space.grid.index_of(d.theta);
        if (gene.angle_idx < 0) {
          throw GenotypeError("slot " + std::to_string(i + 1) +
                              ": angle is not on the grid");
        }
      }
    }
    g.genes.push_back(gene);
  }
  validate(g, space);
  return g;
}

// ---------------------------------------------------------------------------
// unitaries

ComplexMatrix circuit_unitary(const Circuit& circuit, int n) {
  ComplexMatrix acc = ComplexMatrix::identity(std::size_t{1} << n);
  for (const DecodedGate& g : circuit) {
    if (g.is_noop()) continue;
    const ComplexMatrix u = single_gate_matrix(g.gate, g.theta);
    const ComplexMatrix full =
        g.kind == GateKind::kSingle
            ? single_register_matrix(u, g.target, n)
            : controlled_register_matrix(u, g.target, g.control,
                                         g.kind == GateKind::kMulticontrol, n);
    acc = mat_mul(full, acc);
  }
  return acc;
}

Matrix2 to_matrix2(const ComplexMatrix& u) {
  if (u.dim() != 2) throw DimensionError("to_matrix2: gate must be 2x2");
  return {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
}

void apply_gate(ComplexMatrix& acc, const DecodedGate& gate, const Matrix2& u,
                int n) {
  if (gate.is_noop()) return;
  if (gate.target < 0 || gate.target >= n) {
    throw PlacementError("apply_gate: target outside the register");
  }
  const auto bit = [n](int qubit) { return std::size_t{1} << (n - 1 - qubit); };
  const std::size_t tbit = bit(gate.target);
  std::size_t mask = 0;
  if (gate.kind != GateKind::kSingle) {
    if (gate.control < 0 || gate.control >= n || gate.control == gate.target) {
      throw PlacementError("apply_gate: bad control qubit");
    }
    mask = bit(gate.control);
    if (gate.kind == GateKind::kMulticontrol) {
      const int lo = std::min(gate.target, gate.control);
      const int hi = std::max(gate.target, gate.control);
      for (int q = lo + 1; q < hi; ++q) mask |= bit(q);
    }
  }
  const auto [u00, u01, u10, u11] = u;
  const std::size_t dim = acc.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & tbit) || (r & mask) != mask) continue;
    auto row0 = acc.row(r);
    auto row1 = acc.row(r | tbit);
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex a = row0[c];
      const Complex b = row1[c];
      row0[c] = u00 * a + u01 * b;
      row1[c] = u10 * a + u11 * b;
    }
  }
}

ComplexMatrix circuit_unitary_fast(const Circuit& circuit, int n) {
  ComplexMatrix acc = ComplexMatrix::identity(std::size_t{1} << n);
  for (const DecodedGate& g : circuit) {
    if (g.is_noop()) continue;
    apply_gate(acc, g, to_matrix2(single_gate_matrix(g.gate, g.theta)), n);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// cost

int gate_cost(const DecodedGate& gate) {
  const int span = std::abs(gate.control - gate.target);
  switch (gate.kind) {
    case GateKind::kNoop: return 0;
    case GateKind::kSingle: return 1;
    case GateKind::kControl: return 2 * span;
    case GateKind::kMulticontrol: return 3 * span;
  }
  return 0;
}

int circuit_cost(const Circuit& circuit) {
  int total = 0;
  for (const auto& g : circuit) total += gate_cost(g);
  return total;
}

// ---------------------------------------------------------------------------
// G/T/C/Q table

std::string render_row(const DecodedGate& gate) {
  if (gate.is_noop()) return "0, 0, 0, 0";
  std::string row;
  row += variant_word(kind_variant(gate.kind));
  row += ' ';
  row += gate.gate.name();
  row += ", " + std::to_string(gate.target + 1);
  row += ", " + std::to_string(gate.kind == GateKind::kSingle ? 0 : gate.control + 1);
  row += ", " + (gate.gate.is_rotation() ? format_angle(gate.theta) : std::string("0"));
  return row;
}

std::string render_table(const Circuit& circuit) {
  std::string out(kTableHeader);
  out += '\n';
  for (const auto& g : circuit) {
    out += render_row(g);
    out += '\n';
  }
  return out;
}

TableParseError::TableParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> fields;
  if (line.find(',') != std::string_view::npos) {
    while (true) {
      const auto comma = line.find(',');
      fields.push_back(trim(line.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    // Tolerate a trailing separator.
    if (fields.size() == 5 && fields.back().empty()) fields.pop_back();
    return fields;
  }
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    const auto stop = line.find_first_of(" \t\r", start);
    words.push_back(line.substr(start, stop == std::string_view::npos
                                           ? std::string_view::npos
                                           : stop - start));
    pos = stop == std::string_view::npos ? line.size() : stop;
  }
  // "Control X 2 1 0": the gate name spans two words.
  if (words.size() == 5) {
    const std::string_view joined(words[0].data(),
                                  words[1].data() + words[1].size() -
                                      words[0].data());
    return {joined, words[2], words[3], words[4]};
  }
  return words;
}

int parse_int(std::string_view s, int line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw TableParseError(line, std::string("bad ") + what + " '" +
                                    std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s, int line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw TableParseError(line, "bad angle '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Circuit parse_table(std::string_view text, int n, const AngleGrid* grid) {
  Circuit out;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#' || line.starts_with("---")) continue;
    const auto fields = split_row(line);
    if (fields.size() == 4 && fields[0] == "G") continue;
    if (fields.size() != 4) {
      throw TableParseError(line_no, "expected 4 fields (G, T, C, Q), got " +
                                         std::to_string(fields.size()));
    }
    const int target = parse_int(fields[1], line_no, "target");
    const int control = parse_int(fields[2], line_no, "control");
    const double theta = parse_double(fields[3], line_no);

    DecodedGate g;
    if (fields[0] == "0") {
      out.push_back(g);
      continue;
    }
    const auto space = fields[0].find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw TableParseError(line_no, "gate name must be '<Variant> <Gate>'");
    }
    const std::string_view word = fields[0].substr(0, space);
    const std::string_view name = trim(fields[0].substr(space + 1));
    if (word == "Single") {
      g.kind = GateKind::kSingle;
    } else if (word == "Control") {
      g.kind = GateKind::kControl;
    } else if (word == "Multicontrol") {
      g.kind = GateKind::kMulticontrol;
    } else {
      throw TableParseError(line_no, "unknown variant '" + std::string(word) + "'");
    }
    try {
      g.gate = parse_elementary_gate(name);
    } catch (const ConfigError& e) {
      throw TableParseError(line_no, e.what());
    }
    if (target < 1 || target > n) {
      throw TableParseError(line_no, "target qubit " + std::to_string(target) +
                                         " outside [1, " + std::to_string(n) + "]");
    }
    if (control < 0 || control > n) {
      throw TableParseError(line_no, "control qubit " + std::to_string(control) +
                                         " outside [0, " + std::to_string(n) + "]");
    }
    g.target = target - 1;
    if (g.kind != GateKind::kSingle) {
      if (control == 0 || control == target) {
        out.push_back(DecodedGate{});
        continue;
      }
      g.control = control - 1;
    }
    if (g.gate.is_rotation()) {
      g.theta = theta;
      if (grid) {
        const int k = grid->index_of(theta);
        if (k >= 0) g.theta = grid->value(k);
      }
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace qgloa
