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

#include "qgloa/targets.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace qgloa {

ComplexMatrix toffoli() {
  ComplexMatrix m = ComplexMatrix::identity(8);
  m(6, 6) = m(7, 7) = 0.0;
  m(6, 7) = m(7, 6) = 1.0;
  return m;
}

ComplexMatrix grover_diffusion(int n) {
  if (n < 1) throw ConfigError("grover_diffusion: need at least one qubit");
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim);
  const double off = 2.0 / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = i == j ? off - 1.0 : off;
  return m;
}

ComplexMatrix qft(int n) {
  if (n < 1) throw ConfigError("qft: need at least one qubit");
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      // Reduce jk mod N first so the phase stays exact for large products.
      const double phase = 2.0 * std::numbers::pi *
                           static_cast<double>((j * k) % dim) /
                           static_cast<double>(dim);
      m(j, k) = std::polar(norm, phase);
    }
  return m;
}

ComplexMatrix teleport_sender() {
  const double h = 1.0 / std::sqrt(2.0);
  const ComplexMatrix hadamard{{h, h}, {h, -h}};
  const ComplexMatrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix bell = mat_mul(kron(hadamard, i2), cnot);
  return kron(bell, i2);
}

// ---------------------------------------------------------------------------
// Matrix files

namespace {

using Kind = MatrixFileError::Kind;

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto stop = line.find_first_of(" \t\r", start);
    if (stop == std::string_view::npos) stop = line.size();
    out.push_back(line.substr(start, stop - start));
    pos = stop;
  }
  return out;
}

double to_double(std::string_view s, int line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw MatrixFileError(Kind::kParse, "line " + std::to_string(line) +
                                            ": bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

ComplexMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    lines.emplace_back(line_no, line);
  }
  if (lines.empty()) throw MatrixFileError(Kind::kParse, "empty matrix file");

  const auto header = tokens(lines.front().second);
  long long dim = 0;
  if (header.size() != 1 ||
      std::from_chars(header[0].data(), header[0].data() + header[0].size(), dim).ptr !=
          header[0].data() + header[0].size() ||
      dim < 1) {
    throw MatrixFileError(Kind::kParse, "line " + std::to_string(lines.front().first) +
                                            ": expected a positive matrix order");
  }
  const std::size_t rows = lines.size() - 1;
  if (rows != static_cast<std::size_t>(dim)) {
    throw MatrixFileError(Kind::kNotSquare, "order " + std::to_string(dim) +
                                                " declared but " +
                                                std::to_string(rows) + " rows given");
  }
  if ((dim & (dim - 1)) != 0) {
    throw MatrixFileError(Kind::kNotPowerOfTwo,
                          "order " + std::to_string(dim) + " is not a power of two");
  }
  ComplexMatrix m(static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto [ln, line] = lines[r + 1];
    const auto entries = tokens(line);
    if (entries.size() != static_cast<std::size_t>(dim)) {
      throw MatrixFileError(Kind::kNotSquare, "line " + std::to_string(ln) + ": " +
                                                  std::to_string(entries.size()) +
                                                  " entries, expected " +
                                                  std::to_string(dim));
    }
    for (std::size_t c = 0; c < entries.size(); ++c) {
      const auto comma = entries[c].find(',');
      if (comma == std::string_view::npos) {
        throw MatrixFileError(Kind::kParse, "line " + std::to_string(ln) +
                                                ": entry '" + std::string(entries[c]) +
                                                "' is not re,im");
      }
      m(r, c) = Complex(to_double(entries[c].substr(0, comma), ln),
                        to_double(entries[c].substr(comma + 1), ln));
    }
  }
  if (!is_unitary(m, 1e-8)) {
    throw MatrixFileError(Kind::kNotUnitary, "matrix is not unitary within 1e-8");
  }
  return m;
}

ComplexMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixFileError(Kind::kIo, "cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_text(buf.str());
}

std::string format_matrix_text(const ComplexMatrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  char buf[64];
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out += ' ';
      auto end = std::to_chars(buf, buf + sizeof(buf), m(r, c).real()).ptr;
      out.append(buf, end);
      out += ',';
      end = std::to_chars(buf, buf + sizeof(buf), m(r, c).imag()).ptr;
      out.append(buf, end);
    }
    out += '\n';
  }
  return out;
}

void save_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw MatrixFileError(Kind::kIo, "cannot write matrix file '" + path + "'");
  out << format_matrix_text(m);
  if (!out) throw MatrixFileError(Kind::kIo, "write failed for '" + path + "'");
}

// ---------------------------------------------------------------------------
// TargetSpec

std::string TargetSpec::describe() const {
  return path.empty() ? builtin : "file:" + path;
}

std::optional<int> implied_qubits(const TargetSpec& spec) {
  if (!spec.path.empty()) {
    const ComplexMatrix m = load_matrix_file(spec.path);
    int n = 0;
    while ((std::size_t{1} << n) < m.dim()) ++n;
    return n;
  }
  if (spec.builtin == "toffoli" || spec.builtin == "teleport_sender") return 3;
  return std::nullopt;
}

ComplexMatrix make_target(const TargetSpec& spec) {
  if (!spec.path.empty()) {
    ComplexMatrix m = load_matrix_file(spec.path);
    if (spec.qubits && m.dim() != (std::size_t{1} << *spec.qubits)) {
      throw ConfigError("matrix file has order " + std::to_string(m.dim()) +
                        " but " + std::to_string(*spec.qubits) + " qubits requested");
    }
    return m;
  }
  const auto fixed = implied_qubits(spec);
  if (fixed && spec.qubits && *fixed != *spec.qubits) {
    throw ConfigError("target " + spec.builtin + " acts on " + std::to_string(*fixed) +
                      " qubits, not " + std::to_string(*spec.qubits));
  }
  if (spec.builtin == "toffoli") return toffoli();
  if (spec.builtin == "teleport_sender") return teleport_sender();
  const bool known = spec.builtin == "grover_diffusion" || spec.builtin == "qft" ||
                     spec.builtin == "identity";
  if (!known) throw ConfigError("unknown target '" + spec.builtin + "'");
  if (!spec.qubits) throw ConfigError("target " + spec.builtin + " needs --qubits");
  if (*spec.qubits < 1 || *spec.qubits > 12) {
    throw ConfigError("qubit count must lie in [1, 12]");
  }
  if (spec.builtin == "grover_diffusion") return grover_diffusion(*spec.qubits);
  if (spec.builtin == "qft") return qft(*spec.qubits);
  return ComplexMatrix::identity(std::size_t{1} << *spec.qubits);
}

}  // namespace qgloa
