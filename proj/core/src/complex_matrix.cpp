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

#include "icofridge/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace icofridge {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch (" +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: expected " +
                                std::to_string(rows * cols) + " entries, got " +
                                std::to_string(data_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
    throw std::invalid_argument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("ComplexMatrix: ragged initializer list");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
    throw std::invalid_argument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  if (row >= dim || col >= dim) {
    throw std::invalid_argument("ComplexMatrix::unit: index out of range");
  }
  ComplexMatrix m(dim, dim);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions differ (" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex s = a(i, k);
      if (s == Complex{}) continue;
      const auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += s * b_row[j];
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("trace: matrix is not square");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep) {
  if (!rho.is_square()) throw std::invalid_argument("partial_trace: matrix is not square");
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  const std::size_t n_sub = subsystem_dims.size();
  const std::size_t total = std::accumulate(subsystem_dims.begin(), subsystem_dims.end(),
                                            std::size_t{1}, std::multiplies<>());
  if (n_sub == 0 || total != rho.rows() ||
      std::find(subsystem_dims.begin(), subsystem_dims.end(), 0u) != subsystem_dims.end()) {
    throw std::invalid_argument("partial_trace: subsystem dims do not match matrix size " +
                                std::to_string(rho.rows()));
  }
  std::vector<bool> kept(n_sub, false);
  for (std::size_t k : keep) {
    if (k >= n_sub) throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: repeated subsystem index");
    kept[k] = true;
  }

  // Stride of each subsystem inside the full index.
  std::vector<std::size_t> stride(n_sub);
  std::size_t s = 1;
  for (std::size_t i = n_sub; i-- > 0;) {
    stride[i] = s;
    s *= subsystem_dims[i];
  }

  std::vector<std::size_t> kept_idx, traced_idx;
  for (std::size_t i = 0; i < n_sub; ++i) (kept[i] ? kept_idx : traced_idx).push_back(i);

  // Enumerate every assignment of a subset of subsystems and return the
  // offsets they contribute to the full index.
  auto offsets_for = [&](const std::vector<std::size_t>& subs) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t sub : subs) {
      std::vector<std::size_t> next;
      next.reserve(offsets.size() * subsystem_dims[sub]);
      for (std::size_t off : offsets) {
        for (std::size_t v = 0; v < subsystem_dims[sub]; ++v) {
          next.push_back(off + v * stride[sub]);
        }
      }
      offsets = std::move(next);
    }
    return offsets;
  };
  const auto kept_off = offsets_for(kept_idx);
  const auto traced_off = offsets_for(traced_idx);

  ComplexMatrix out(kept_off.size(), kept_off.size());
  for (std::size_t r = 0; r < kept_off.size(); ++r) {
    for (std::size_t c = 0; c < kept_off.size(); ++c) {
      Complex sum{};
      for (std::size_t t : traced_off) sum += rho(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::initializer_list<std::size_t> subsystem_dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(subsystem_dims.begin(), subsystem_dims.size()),
                       std::span<const std::size_t>(keep.begin(), keep.size()));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(matmul(dagger(a), a), ComplexMatrix::identity(a.rows())) <= tol;
}

double min_eigenvalue_hermitian(const ComplexMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("min_eigenvalue_hermitian: not square");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto ur = static_cast<std::size_t>(r);
      const auto uc = static_cast<std::size_t>(c);
      m(r, c) = 0.5 * (a(ur, uc) + std::conj(a(uc, ur)));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("min_eigenvalue_hermitian: eigensolver did not converge");
  }
  return solver.eigenvalues().minCoeff();
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return min_eigenvalue_hermitian(a) >= -tol;
}

namespace gates {

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

}  // namespace gates

}  // namespace icofridge
