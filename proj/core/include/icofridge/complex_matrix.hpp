// Copyright 2026 The icofridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICOFRIDGE_COMPLEX_MATRIX_HPP
#define ICOFRIDGE_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace icofridge {

using Complex = std::complex<double>;

/**
 * Dense row-major complex matrix.
 *
 * Every operator in the library (Kraus operators, density matrices, circuit
 * unitaries) is one of these. Sizes never exceed a few thousand rows, so all
 * algorithms are the naive O(d^3) ones.
 *
 * Multi-qubit index convention: qubit 0 is the most significant bit of the
 * computational-basis index. Any other bit order (e.g. histogram labels) is
 * applied only when formatting output.
 */
class ComplexMatrix {
 public:
  /// Zero matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major entries; rejects a size mismatch or any
  /// non-finite entry with std::invalid_argument.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Nested-list construction, one inner list per row.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);
  /// |row><col| in a dim-dimensional space.
  static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Complex> entries() { return data_; }
  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
/// Matrix product; same as matmul().
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws std::invalid_argument when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

/**
 * Reduced matrix over the subsystems listed in `keep`.
 *
 * `subsystem_dims` lists the factor dimensions in tensor order (first factor
 * is most significant). Kept subsystems appear in their original relative
 * order regardless of the order given in `keep`. Throws std::invalid_argument
 * if the dimensions do not multiply to rho's size, `keep` is empty, or an
 * index is out of range or repeated.
 */
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::initializer_list<std::size_t> subsystem_dims,
                            std::initializer_list<std::size_t> keep);

/// Largest |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Validity checks. Hermiticity and unitarity use the max-abs-entry norm.
bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);
/// Hermitian within tol and smallest eigenvalue >= -tol.
bool is_psd(const ComplexMatrix& a, double tol);

/// Smallest eigenvalue of the Hermitian part (a + a^dagger) / 2.
double min_eigenvalue_hermitian(const ComplexMatrix& a);

namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
}  // namespace gates

}  // namespace icofridge

#endif  // ICOFRIDGE_COMPLEX_MATRIX_HPP
