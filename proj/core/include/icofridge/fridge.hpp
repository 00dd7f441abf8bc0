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

#ifndef ICOFRIDGE_FRIDGE_HPP
#define ICOFRIDGE_FRIDGE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icofridge/channels.hpp"
#include "icofridge/circuit.hpp"
#include "icofridge/ico_switch.hpp"
#include "icofridge/rng.hpp"

namespace icofridge {

/// Output-side noise: with probability 1 - p_suc a branch is replaced by a
/// failure state. Only the failure state's excited population matters.
struct SimpleNoiseParams {
  double p_suc = 1.0;
  double rho_fail_excited_pop = 0.5;
};

/// Input-side noise: each thermal input is prepared faithfully with
/// probability p_init_suc and otherwise at inverse temperature beta_fail.
struct InitNoiseParams {
  double p_init_suc = 1.0;
  double beta_fail = 0.0;
};

/**
 * Noise applied to one ICO cooling step. The components compose: `init`
 * perturbs the inputs, `gate_level` routes the step through the noisy
 * 4-qubit circuit instead of the closed form, and `simple` mixes the
 * resulting branch states with the failure state. All empty means noiseless.
 */
struct NoiseModel {
  std::optional<SimpleNoiseParams> simple;
  std::optional<InitNoiseParams> init;
  std::optional<NoiseSpec> gate_level;

  bool is_noiseless() const { return !simple && !init && !gate_level; }
  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
  /// "none", or the enabled components joined with '+', e.g. "simple+with_init".
  std::string name() const;
};

enum class ControlOutcome { kPlus, kMinus };

std::string_view to_string(ControlOutcome o);

struct FridgeConfig {
  double beta_cold = 1.0;
  double beta_hot = 0.1;
  NoiseModel noise;
  std::uint64_t seed = 0;

  /// Requires beta_hot < beta_cold.
  void validate() const;
};

/**
 * One refrigeration cycle. Heats are in units of the qubit gap and signed:
 * heat_from_cold > 0 means energy left the cold bath, heat_to_hot > 0 means
 * energy entered the hot bath.
 */
struct CycleRecord {
  ControlOutcome control_outcome = ControlOutcome::kPlus;
  double beta_work_after_switch = 0.0;
  double heat_from_cold = 0.0;
  double heat_to_hot = 0.0;
  double beta_work_end = 0.0;
};

/// SWITCH of two thermalizing channels at beta_reservoir acting on a work
/// qubit at beta_work, followed by the +/- control measurement.
ConditionalOutcome cooling_step(double beta_reservoir, double beta_work, const NoiseModel& noise);

/// cooling_step with work qubit and reservoirs at the same temperature.
ConditionalOutcome ico_cooling_step(double beta_in, const NoiseModel& noise);

/// Effective beta of the plus branch of ico_cooling_step.
double plus_branch_beta(double beta_in, const NoiseModel& noise);

/**
 * Plus: the cooled work qubit rethermalizes with the cold bath. Minus: it
 * dumps heat into the hot bath, then rethermalizes with the cold bath; both
 * exchanges are recorded. The work qubit ends at beta_cold either way.
 */
CycleRecord run_cycle(double beta_work_start, const FridgeConfig& cfg, SplitMix64& rng);

/// run_cycle with the control outcome forced rather than sampled.
CycleRecord run_cycle_with_outcome(double beta_work_start, const FridgeConfig& cfg,
                                   ControlOutcome outcome);

/// n_cycles independent cycles starting at beta_cold; cycle i samples from
/// SplitMix64::substream(cfg.seed, i).
std::vector<CycleRecord> run_cycles(const FridgeConfig& cfg, std::uint64_t n_cycles);

struct CycleSummary {
  std::uint64_t n_cycles = 0;
  std::uint64_t n_plus = 0;
  double mean_heat_from_cold = 0.0;
  double stderr_heat_from_cold = 0.0;
  double mean_heat_to_hot = 0.0;
  double stderr_heat_to_hot = 0.0;
};

CycleSummary summarize(const std::vector<CycleRecord>& records);

/// Exact per-cycle expectations over the control outcome.
double expected_heat_from_cold(const FridgeConfig& cfg);
double expected_heat_to_hot(const FridgeConfig& cfg);

/// [beta_start, beta_1, ..., beta_n] assuming every measurement gives plus.
std::vector<double> trajectory_all_plus(double beta_start, int n_steps, const NoiseModel& noise);

struct FixedPointOptions {
  double bracket_lo = 1e-6;
  double bracket_hi = 20.0;
  double tolerance = 1e-9;
  int max_iterations = 200;
};

/// Bisection result for beta_out(beta) = beta on the plus branch. `found` is
/// false when the bracket shows no sign change, which is the noiseless case
/// where cooling is unbounded.
struct FixedPointResult {
  bool found = false;
  double beta = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

FixedPointResult fixed_point_beta(const NoiseModel& noise, const FixedPointOptions& opts = {});

struct CycleEstimate {
  bool reachable = false;
  int n_ideal = 0;
  /// Product of 1/p_plus over the ideal trajectory.
  double expected_cycles_exact = 0.0;
  /// 2^n_ideal, assuming p_plus = p_minus = 1/2.
  double expected_cycles_approx = 0.0;
};

CycleEstimate cycles_to_target(double beta_start, double beta_target, const NoiseModel& noise,
                               int max_steps = 10000);

/// Final 4-qubit state of switch_experiment_circuit(switch_core) with the
/// control in |0>, the work qubit at beta_work and both reservoirs at
/// beta_reservoir. `init` perturbs the thermal inputs.
DensityMatrix run_switch_experiment(double beta_reservoir, double beta_work,
                                    const std::optional<NoiseSpec>& noise,
                                    const std::optional<InitNoiseParams>& init = std::nullopt,
                                    const Circuit& switch_core = switch_circuit_simplified());

/// Thermal-qubit marginals for one control outcome, indexed work, reservoir A,
/// reservoir B. `qubits` is empty when the branch has zero probability.
struct BranchMarginals {
  double prob = 0.0;
  std::vector<DensityMatrix> qubits;
  std::array<double, 3> beta{};
};

struct ConditionalMarginals {
  BranchMarginals plus;
  BranchMarginals minus;
};

/// Splits a final experiment state on the control bit (0 = plus).
ConditionalMarginals conditional_marginals(const DensityMatrix& final_state);

ConditionalMarginals conditional_marginals(double beta_in,
                                           const std::optional<NoiseSpec>& noise = std::nullopt,
                                           const Circuit& switch_core = switch_circuit_simplified());

}  // namespace icofridge

#endif  // ICOFRIDGE_FRIDGE_HPP
