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

#include "icofridge/channels.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace icofridge {

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
  if (!mat_.is_square()) {
    throw std::invalid_argument("DensityMatrix: matrix is not square");
  }
  if (!is_hermitian(mat_, tol)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = trace(mat_);
  if (std::abs(tr - Complex(1.0)) > tol) {
    throw std::invalid_argument("DensityMatrix: trace is " + std::to_string(tr.real()) +
                                ", expected 1");
  }
  if (min_eigenvalue_hermitian(mat_) < -tol) {
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
  return DensityMatrix(ComplexMatrix::unit(dim, index, index));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

int DensityMatrix::num_qubits() const {
  if (!std::has_single_bit(dim())) {
    throw std::logic_error("DensityMatrix: dimension " + std::to_string(dim()) +
                           " is not a qubit register");
  }
  return std::countr_zero(dim());
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix mix(double weight, const DensityMatrix& a, const DensityMatrix& b) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("mix: weight must lie in [0, 1]");
  }
  return DensityMatrix(a.matrix() * Complex(weight) + b.matrix() * Complex(1.0 - weight));
}

double completeness_error(const std::vector<ComplexMatrix>& kraus_ops) {
  if (kraus_ops.empty()) return std::numeric_limits<double>::infinity();
  ComplexMatrix sum(kraus_ops.front().cols(), kraus_ops.front().cols());
  for (const auto& k : kraus_ops) sum += matmul(dagger(k), k);
  return max_abs_diff(sum, ComplexMatrix::identity(sum.rows()));
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, double tol)
    : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
  for (const auto& k : ops_) {
    if (k.rows() != out_dim() || k.cols() != in_dim()) {
      throw std::invalid_argument("KrausChannel: Kraus operators differ in shape");
    }
  }
  const double err = completeness_error();
  if (err > tol) {
    throw std::invalid_argument("KrausChannel: completeness violated by " + std::to_string(err));
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel({ComplexMatrix::identity(dim)});
}

KrausChannel KrausChannel::unitary(ComplexMatrix u) {
  if (!is_unitary(u, kValidityTolerance)) {
    throw std::invalid_argument("KrausChannel::unitary: matrix is not unitary");
  }
  return KrausChannel({std::move(u)});
}

double KrausChannel::completeness_error() const { return icofridge::completeness_error(ops_); }

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.in_dim() != rho.dim()) {
    throw std::invalid_argument("apply_channel: channel input dimension " +
                                std::to_string(ch.in_dim()) + " does not match state dimension " +
                                std::to_string(rho.dim()));
  }
  ComplexMatrix out(ch.out_dim(), ch.out_dim());
  for (const auto& k : ch.ops()) out += matmul(matmul(k, rho.matrix()), dagger(k));
  return DensityMatrix(std::move(out));
}

double ThermalSpec::excited_population() const {
  if (std::isnan(beta_delta)) throw std::invalid_argument("ThermalSpec: beta_delta is NaN");
  return 1.0 / (1.0 + std::exp(beta_delta));
}

double ThermalSpec::ground_population() const {
  if (std::isnan(beta_delta)) throw std::invalid_argument("ThermalSpec: beta_delta is NaN");
  return 1.0 / (1.0 + std::exp(-beta_delta));
}

DensityMatrix population_state(double excited_population) {
  if (!(excited_population >= 0.0 && excited_population <= 1.0)) {
    throw std::invalid_argument("population_state: population must lie in [0, 1]");
  }
  return DensityMatrix(ComplexMatrix::diagonal({1.0 - excited_population, excited_population}));
}

DensityMatrix thermal_state(ThermalSpec spec) {
  return DensityMatrix(
      ComplexMatrix::diagonal({spec.ground_population(), spec.excited_population()}));
}

KrausChannel thermalizing_channel(const DensityMatrix& t) {
  if (t.dim() != 2) throw std::invalid_argument("thermalizing_channel: expected a single qubit");
  if (std::abs(t.matrix()(0, 1)) > kValidityTolerance) {
    throw std::invalid_argument("thermalizing_channel: thermal state must be energy-diagonal");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(4);
  for (std::size_t i = 0; i < 2; ++i) {
    const double amp = std::sqrt(std::max(0.0, t.population(i)));
    for (std::size_t j = 0; j < 2; ++j) ops.push_back(ComplexMatrix::unit(2, i, j) * Complex(amp));
  }
  return KrausChannel(std::move(ops));
}

double effective_beta(const DensityMatrix& rho, double floor) {
  if (rho.dim() != 2) throw std::invalid_argument("effective_beta: expected a single qubit");
  const double p0 = rho.population(0);
  const double p1 = rho.population(1);
  if (p1 <= floor) return std::numeric_limits<double>::infinity();
  if (p0 <= floor) return -std::numeric_limits<double>::infinity();
  return std::log(p0 / p1);
}

}  // namespace icofridge
