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

#ifndef ICOFRIDGE_CHANNELS_HPP
#define ICOFRIDGE_CHANNELS_HPP

#include <cstddef>
#include <vector>

#include "icofridge/complex_matrix.hpp"

namespace icofridge {

/// Tolerance used by the DensityMatrix and KrausChannel validity checks.
inline constexpr double kValidityTolerance = 1e-9;

/// Populations at or below this are treated as zero by effective_beta.
inline constexpr double kPopulationFloor = 1e-15;

/**
 * A validated quantum state: Hermitian, unit trace and positive semidefinite,
 * all within `tol` (default kValidityTolerance).
 *
 * Construction throws std::invalid_argument if any check fails. The
 * dimension is arbitrary; num_qubits() is defined only for powers of two.
 */
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat, double tol = kValidityTolerance);

  /// |index><index| in a dim-dimensional space.
  static DensityMatrix basis_state(std::size_t dim, std::size_t index);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return mat_.rows(); }
  /// Throws std::logic_error if dim() is not a power of two.
  int num_qubits() const;

  const ComplexMatrix& matrix() const { return mat_; }
  /// Real part of the i-th diagonal entry.
  double population(std::size_t i) const { return mat_(i, i).real(); }

 private:
  ComplexMatrix mat_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

/// weight * a + (1 - weight) * b; weight must lie in [0, 1].
DensityMatrix mix(double weight, const DensityMatrix& a, const DensityMatrix& b);

/// CPTP map rho -> sum_k K_k rho K_k^dagger.
class KrausChannel {
 public:
  /// All operators must share one shape (out_dim x in_dim) and satisfy
  /// completeness within `tol`; otherwise std::invalid_argument.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops,
                        double tol = kValidityTolerance);

  static KrausChannel identity(std::size_t dim);
  /// Single-operator channel; throws if `u` is not unitary.
  static KrausChannel unitary(ComplexMatrix u);

  std::size_t in_dim() const { return ops_.front().cols(); }
  std::size_t out_dim() const { return ops_.front().rows(); }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }

  /// max-abs deviation of sum_k K_k^dagger K_k from the identity.
  double completeness_error() const;

 private:
  std::vector<ComplexMatrix> ops_;
};

double completeness_error(const std::vector<ComplexMatrix>& kraus_ops);

/// Throws std::invalid_argument when ch.in_dim() != rho.dim().
DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/**
 * Thermal state of a qubit given the dimensionless product beta * gap.
 *
 * beta_delta may be +inf (ground state), 0 (maximally mixed) or negative
 * (population inversion). |0> is the ground state.
 */
struct ThermalSpec {
  double beta_delta = 0.0;

  /// q = 1 / (1 + e^{beta_delta})
  double excited_population() const;
  /// 1 - q, evaluated without cancellation.
  double ground_population() const;
};

DensityMatrix thermal_state(ThermalSpec spec);
inline DensityMatrix thermal_state(double beta_delta) { return thermal_state(ThermalSpec{beta_delta}); }

/// Qubit state diag(1 - q, q).
DensityMatrix population_state(double excited_population);

/**
 * Constant channel sending every qubit state to `t`.
 *
 * Uses the four rank-one operators sqrt(t_ii) |i><j|. Throws if `t` is not a
 * single qubit or has off-diagonal entries above kValidityTolerance.
 */
KrausChannel thermalizing_channel(const DensityMatrix& t);

/**
 * ln(p0 / p1) from the diagonal populations of a single-qubit state.
 *
 * Returns +inf when p1 <= floor and -inf when p0 <= floor. Coherences are
 * ignored.
 */
double effective_beta(const DensityMatrix& rho, double floor = kPopulationFloor);

}  // namespace icofridge

#endif  // ICOFRIDGE_CHANNELS_HPP
