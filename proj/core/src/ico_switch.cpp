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

#include "icofridge/ico_switch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace icofridge {

namespace {

constexpr double kAbsentBranchProbability = 1e-14;

void require_square_target(const KrausChannel& ch, std::size_t dim, const char* what) {
  if (ch.in_dim() != ch.out_dim()) {
    throw std::invalid_argument(std::string(what) + ": channels must map a space to itself");
  }
  if (ch.in_dim() != dim) {
    throw std::invalid_argument(std::string(what) + ": channels act on different target dimensions");
  }
}

// Normalizes an unnormalized branch, or leaves it absent.
std::optional<DensityMatrix> normalize_branch(ComplexMatrix sigma, double prob, double floor) {
  if (prob <= floor) return std::nullopt;
  sigma *= Complex(1.0 / prob);
  return DensityMatrix(std::move(sigma));
}

}  // namespace

SwitchChannel switch_compose(const KrausChannel& ch1, const KrausChannel& ch2) {
  const std::size_t d = ch1.in_dim();
  require_square_target(ch1, d, "switch_compose");
  require_square_target(ch2, d, "switch_compose");

  const auto p0 = ComplexMatrix::unit(2, 0, 0);
  const auto p1 = ComplexMatrix::unit(2, 1, 1);
  std::vector<ComplexMatrix> ops;
  ops.reserve(ch1.ops().size() * ch2.ops().size());
  for (const auto& k1 : ch1.ops()) {
    for (const auto& k2 : ch2.ops()) {
      ops.push_back(kron(p0, matmul(k1, k2)) + kron(p1, matmul(k2, k1)));
    }
  }
  return SwitchChannel{2, KrausChannel(std::move(ops))};
}

SwitchChannel switch_compose_n(std::span<const KrausChannel> channels,
                               std::span<const std::vector<std::size_t>> orders) {
  if (channels.empty()) throw std::invalid_argument("switch_compose_n: no channels");
  if (orders.empty()) throw std::invalid_argument("switch_compose_n: no orders");
  const std::size_t n = channels.size();
  const std::size_t d = channels.front().in_dim();
  for (const auto& ch : channels) require_square_target(ch, d, "switch_compose_n");

  for (const auto& order : orders) {
    std::vector<std::size_t> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = sorted.size() == n;
    for (std::size_t i = 0; is_perm && i < n; ++i) is_perm = sorted[i] == i;
    if (!is_perm) throw std::invalid_argument("switch_compose_n: order is not a permutation of the channel indices");
  }

  const std::size_t control_dim = orders.size();
  std::vector<ComplexMatrix> ops;

  // Odometer over one Kraus index per channel.
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    ComplexMatrix w(control_dim * d, control_dim * d);
    for (std::size_t k = 0; k < control_dim; ++k) {
      ComplexMatrix product = ComplexMatrix::identity(d);
      for (std::size_t c : orders[k]) product = matmul(product, channels[c].ops()[pick[c]]);
      w += kron(ComplexMatrix::unit(control_dim, k, k), product);
    }
    ops.push_back(std::move(w));

    std::size_t pos = n;
    while (pos-- > 0) {
      if (++pick[pos] < channels[pos].ops().size()) break;
      pick[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return SwitchChannel{control_dim, KrausChannel(std::move(ops))};
}

ConditionalOutcome conditional_thermal_output(const DensityMatrix& t, const DensityMatrix& rho_in) {
  if (t.dim() != 2 || rho_in.dim() != 2) {
    throw std::invalid_argument("conditional_thermal_output: expected single-qubit states");
  }
  if (std::abs(t.matrix()(0, 1)) > kValidityTolerance) {
    throw std::invalid_argument("conditional_thermal_output: thermal state must be diagonal");
  }
  const double tp[2] = {std::max(0.0, t.population(0)), std::max(0.0, t.population(1))};
  const double rp[2] = {std::max(0.0, rho_in.population(0)), std::max(0.0, rho_in.population(1))};

  ComplexMatrix plus(2, 2), minus(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    // t_i (1 +/- t_i rho_ii) / 2, with 1 - t_i rho_ii rewritten as
    // t_j + t_i rho_jj to avoid cancellation near the ground state.
    plus(i, i) = tp[i] * (1.0 + tp[i] * rp[i]) / 2.0;
    minus(i, i) = tp[i] * (tp[j] + tp[i] * rp[j]) / 2.0;
  }
  const Complex coherence = tp[0] * rho_in.matrix()(0, 1) * tp[1] / 2.0;
  plus(0, 1) = coherence;
  plus(1, 0) = std::conj(coherence);
  minus(0, 1) = -coherence;
  minus(1, 0) = -std::conj(coherence);

  ConditionalOutcome out;
  out.plus_prob = plus(0, 0).real() + plus(1, 1).real();
  out.minus_prob = minus(0, 0).real() + minus(1, 1).real();
  out.plus_state = normalize_branch(std::move(plus), out.plus_prob, 0.0);
  out.minus_state = normalize_branch(std::move(minus), out.minus_prob, 0.0);
  return out;
}

ComplexMatrix plus_minus_basis() { return gates::hadamard(); }

DensityMatrix plus_state() { return DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}); }

ConditionalOutcome measure_control_pm(const DensityMatrix& joint, const ComplexMatrix& basis) {
  if (basis.rows() != 2 || basis.cols() != 2 || !is_unitary(basis, kValidityTolerance)) {
    throw std::invalid_argument("measure_control_pm: basis must be a 2x2 unitary");
  }
  if (joint.dim() % 2 != 0) {
    throw std::invalid_argument("measure_control_pm: state has no leading qubit");
  }
  const std::size_t d = joint.dim() / 2;
  const auto& m = joint.matrix();

  auto project = [&](std::size_t outcome) {
    ComplexMatrix sigma(d, d);
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        const Complex w = std::conj(basis(a, outcome)) * basis(b, outcome);
        if (w == Complex{}) continue;
        for (std::size_t r = 0; r < d; ++r) {
          for (std::size_t c = 0; c < d; ++c) sigma(r, c) += w * m(a * d + r, b * d + c);
        }
      }
    }
    return sigma;
  };

  ConditionalOutcome out;
  auto plus = project(0);
  auto minus = project(1);
  out.plus_prob = trace(plus).real();
  out.minus_prob = trace(minus).real();
  out.plus_state = normalize_branch(std::move(plus), out.plus_prob, kAbsentBranchProbability);
  out.minus_state = normalize_branch(std::move(minus), out.minus_prob, kAbsentBranchProbability);
  return out;
}

}  // namespace icofridge
