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

// Brute-force reference constructions for tests. Nothing here calls the
// library's kron/mat_mul/pseudo-code paths; everything is built by
// enumerating basis states.

#ifndef QGLOA_TESTS_ORACLES_H
#define QGLOA_TESTS_ORACLES_H

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qgloa/matrix.h"

namespace qgloa::oracle {

inline std::size_t bit_of(int qubit, int n) { return std::size_t{1} << (n - 1 - qubit); }

/// Register matrix that applies `u` to `target` iff every qubit in `controls`
/// is |1>. Qubit 0 is the most significant index bit.
inline ComplexMatrix controlled_action(const ComplexMatrix& u, int n, int target,
                                       const std::vector<int>& controls) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim);
  const std::size_t tb = bit_of(target, n);
  for (std::size_t col = 0; col < dim; ++col) {
    bool active = true;
    for (int c : controls) active = active && (col & bit_of(c, n));
    if (!active) {
      m(col, col) = 1.0;
      continue;
    }
    const int in = (col & tb) ? 1 : 0;
    const std::size_t base = col & ~tb;
    m(base, col) += u(0, in);
    m(base | tb, col) += u(1, in);
  }
  return m;
}

/// Projector form |0><0| (x) I + |1><1| (x) u for a single control, expanded
/// entry by entry.
inline ComplexMatrix projector_controlled(const ComplexMatrix& u, int n, int target,
                                          int control) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim);
  const std::size_t tb = bit_of(target, n);
  const std::size_t cb = bit_of(control, n);
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t col = 0; col < dim; ++col) {
      // All bits other than the target must agree.
      if ((row & ~tb) != (col & ~tb)) continue;
      const bool ctrl = col & cb;
      const int r = (row & tb) ? 1 : 0;
      const int c = (col & tb) ? 1 : 0;
      if (!ctrl) {
        m(row, col) = r == c ? 1.0 : 0.0;
      } else {
        m(row, col) = u(r, c);
      }
    }
  return m;
}

inline ComplexMatrix product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

/// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& c : cols)
    for (auto& z : c) z = {g(rng), g(rng)};
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex dot{};
      for (std::size_t i = 0; i < dim; ++i) dot += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < dim; ++i) cols[k][i] -= dot * cols[j][i];
    }
    double norm = 0;
    for (const auto& z : cols[k]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[k]) z /= norm;
  }
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = cols[j][i];
  return m;
}

inline ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }
inline ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

}  // namespace qgloa::oracle

#endif  // QGLOA_TESTS_ORACLES_H
