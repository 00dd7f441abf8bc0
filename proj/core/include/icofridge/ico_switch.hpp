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

#ifndef ICOFRIDGE_ICO_SWITCH_HPP
#define ICOFRIDGE_ICO_SWITCH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "icofridge/channels.hpp"

namespace icofridge {

/// Channel on control (x) target produced by placing channels in a
/// superposition of orders.
struct SwitchChannel {
  std::size_t control_dim;
  KrausChannel composite;
};

/**
 * Target state after measuring a control qubit, per outcome.
 *
 * A branch with zero probability has no state (std::nullopt) rather than a
 * NaN-filled matrix.
 */
struct ConditionalOutcome {
  std::optional<DensityMatrix> plus_state;
  double plus_prob = 0.0;
  std::optional<DensityMatrix> minus_state;
  double minus_prob = 0.0;
};

/**
 * Two-channel quantum SWITCH.
 *
 * Kraus operators W_ij = |0><0| (x) K1_i K2_j + |1><1| (x) K2_j K1_i, one per
 * (i, j) pair, ordered with i as the slow index. Both channels must be square
 * on the same target dimension.
 */
SwitchChannel switch_compose(const KrausChannel& ch1, const KrausChannel& ch2);

/**
 * N-channel SWITCH over a chosen subset of orders.
 *
 * Control basis state k selects orders[k]; an order (a, b, c) contributes the
 * operator product K_a K_b K_c with the first listed channel leftmost, so
 * orders {(0,1),(1,0)} reproduce switch_compose. Each order must be a
 * permutation of 0..N-1; control_dim is orders.size().
 */
SwitchChannel switch_compose_n(std::span<const KrausChannel> channels,
                               std::span<const std::vector<std::size_t>> orders);

/**
 * Closed-form control-measured output of the SWITCH of two thermalizing
 * channels with the control prepared in |+>.
 *
 * Unnormalized branches are T/2 +/- T rho T/2. `t` must be a diagonal qubit
 * state. A branch is marked absent only when its probability is exactly
 * zero.
 */
ConditionalOutcome conditional_thermal_output(const DensityMatrix& t,
                                              const DensityMatrix& rho_in);

/// Columns are |+> and |->.
ComplexMatrix plus_minus_basis();

/// |+><+| on one qubit.
DensityMatrix plus_state();

/**
 * Measures the leading control qubit of `joint` and returns the normalized
 * target states.
 *
 * `basis` is a 2x2 unitary whose first column is the "plus" outcome vector and
 * whose second column is the "minus" one. Branches with probability at or
 * below 1e-14 are reported absent.
 */
ConditionalOutcome measure_control_pm(const DensityMatrix& joint,
                                      const ComplexMatrix& basis = plus_minus_basis());

}  // namespace icofridge

#endif  // ICOFRIDGE_ICO_SWITCH_HPP
