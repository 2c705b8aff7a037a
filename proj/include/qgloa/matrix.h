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

#ifndef QGLOA_MATRIX_H
#define QGLOA_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qgloa/errors.h"

namespace qgloa {

using Complex = std::complex<double>;

/// Dense square complex matrix, stored row-major.
///
/// Basis index semantics are shared by every module: for an n-qubit register
/// the first qubit (label 1, register position 0) is the most significant bit
/// of the row/column index.
class ComplexMatrix {
 public:
  /// Zero matrix of order `dim` (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);
  /// Builds from nested rows; every row must have rows.size() entries.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<Complex> row(std::size_t r) {
    return {data_.data() + r * dim_, dim_};
  }
  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * dim_, dim_};
  }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix operator*(Complex scalar) const;

  bool operator==(const ComplexMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// Largest entry-wise modulus of a - b. Throws DimensionError on mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// True iff max |(a a^dagger - I)_ij| <= tol.
bool is_unitary(const ComplexMatrix& a, double tol);

}  // namespace qgloa

#endif  // QGLOA_MATRIX_H
