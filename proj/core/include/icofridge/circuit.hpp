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

#ifndef ICOFRIDGE_CIRCUIT_HPP
#define ICOFRIDGE_CIRCUIT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icofridge/channels.hpp"

namespace icofridge {

/// Gate kinds. ANTI_CSWAP swaps its targets when the control is |0>.
/// T and TDG exist so that Toffoli gates can be lowered to 1- and 2-qubit
/// gates.
enum class GateKind { X, H, T, TDG, CNOT, SWAP, TOFFOLI, CSWAP, ANTI_CSWAP };

int arity(GateKind kind);
std::string_view gate_name(GateKind kind);
/// Inverse of gate_name(); std::nullopt for an unknown name.
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// Qubit operands are listed control(s) first, then targets.
struct Gate {
  GateKind kind;
  std::vector<int> qubits;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Dense simulation refuses wider circuits.
inline constexpr int kMaxSimulatedQubits = 12;
/// Wider circuits are accepted but flagged by Circuit::warnings().
inline constexpr int kRecommendedMaxQubits = 5;

class Circuit {
 public:
  /// Throws std::invalid_argument unless 1 <= n_qubits <= kMaxSimulatedQubits.
  explicit Circuit(int n_qubits);
  Circuit(int n_qubits, std::vector<Gate> gates);

  /// Validates arity, range and distinctness of operands.
  Circuit& add(Gate g);
  Circuit& add(GateKind kind, std::vector<int> qubits) { return add(Gate{kind, std::move(qubits)}); }
  Circuit& append(const Circuit& other);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  std::vector<std::string> warnings() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

// Qubit roles in the SWITCH experiment.
inline constexpr int kControlQubit = 0;
inline constexpr int kWorkQubit = 1;
inline constexpr int kReservoirAQubit = 2;
inline constexpr int kReservoirBQubit = 3;

/// 2^n x 2^n unitary of the whole circuit (qubit 0 most significant).
ComplexMatrix build_unitary(const Circuit& c);

/// Four controlled swaps; the control picks which reservoir the work qubit
/// meets first.
Circuit switch_circuit_full();

/// Equivalent three-gate form: CSWAP(0;1,2), SWAP(1,3), ANTI_CSWAP(0;1,2).
Circuit switch_circuit_simplified();

/// H on the control, the SWITCH, then H on the control again so that a
/// computational measurement of qubit 0 reads out the +/- basis (0 = plus).
Circuit switch_experiment_circuit(const Circuit& switch_core = switch_circuit_simplified());

/// CSWAP(c;a,b) -> CNOT(b,a) TOFFOLI(c,a;b) CNOT(b,a); ANTI_CSWAP is the same
/// sequence wrapped in X(c). Throws for any other kind.
std::vector<Gate> decompose_cswap(const Gate& g);

/// Standard 6-CNOT, 7-T lowering of TOFFOLI(a,b;c).
std::vector<Gate> decompose_toffoli(const Gate& g);

/// Lowers every 3-qubit gate so that only 1- and 2-qubit gates remain.
Circuit decompose_to_two_qubit(const Circuit& c);

struct GateMetrics {
  int depth = 0;
  int total_gates = 0;
  int two_qubit_gates = 0;

  friend bool operator==(const GateMetrics&, const GateMetrics&) = default;
};

/// Depth by greedy layering: each gate lands in the earliest layer after the
/// last one touching any of its qubits.
GateMetrics gate_metrics(const Circuit& c);

struct PauliProbabilities {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double total() const { return x + y + z; }
};

/// p01: a true 0 is reported as 1. p10: a true 1 is reported as 0.
struct ReadoutError {
  double p01 = 0.0;
  double p10 = 0.0;
};

/**
 * Gate-level noise.
 *
 * After every 1-qubit gate its qubit suffers X, Y or Z with probabilities
 * `after_1q`; after every 2-qubit gate each of its qubits independently
 * suffers `after_2q`. Three-qubit gates are lowered first. `readout` is empty
 * (no readout error), a single entry applied to every qubit, or one entry per
 * qubit.
 */
struct NoiseSpec {
  PauliProbabilities after_1q;
  PauliProbabilities after_2q;
  std::vector<ReadoutError> readout;

  /// Throws std::invalid_argument on out-of-range probabilities or a
  /// readout list whose size is neither 0, 1 nor n_qubits.
  void validate(int n_qubits) const;
  ReadoutError readout_for(int qubit) const;
  bool is_trivial() const;
};

/// Final state of `c` applied to `rho_in`, including Pauli insertions and the
/// readout channel when `noise` is given. Readout error acts as a population
/// transfer applied just before an ideal computational measurement.
DensityMatrix evolve_density(const Circuit& c, const DensityMatrix& rho_in,
                             const std::optional<NoiseSpec>& noise = std::nullopt);

/// Exact probabilities of each computational outcome (index order, qubit 0
/// most significant) for a basis-state input.
std::vector<double> outcome_distribution(const Circuit& c, std::uint64_t input_index,
                                         const std::optional<NoiseSpec>& noise = std::nullopt);

/// Parses "0101"-style bitstrings, qubit 0 first. Throws on a length mismatch
/// or a character other than 0/1.
std::uint64_t parse_bitstring(std::string_view bits, int n_qubits);
std::string to_bitstring(std::uint64_t index, int n_qubits);

enum class BitOrder {
  kQubitZeroFirst,  ///< label character k is qubit k
  kExperimentLabel,  ///< LSB..MSB = control, reservoir A, work, reservoir B
};

struct ShotResult {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t n_shots = 0;
  BitOrder bit_order = BitOrder::kQubitZeroFirst;

  friend bool operator==(const ShotResult&, const ShotResult&) = default;
};

/**
 * Samples n_shots computational-basis measurements of `c` run on a basis
 * input. Shot i draws from SplitMix64::substream(seed, i). Noisy runs sample
 * the exact noisy distribution.
 */
ShotResult simulate_shots(const Circuit& c, std::string_view input_basis_state,
                          const std::optional<NoiseSpec>& noise, std::uint64_t n_shots,
                          std::uint64_t seed);

/**
 * Prepares a mixed input by drawing a basis state per shot from `weights`
 * (which must sum to 1 within 1e-9), then samples that run once.
 *
 * The output draw of shot i uses the same random number as simulate_shots, so
 * a point mass reproduces simulate_shots exactly.
 */
ShotResult mixed_input_run(const Circuit& c, const std::map<std::string, double>& weights,
                           const std::optional<NoiseSpec>& noise, std::uint64_t n_shots,
                           std::uint64_t seed);

/// Label for one 4-qubit outcome of the SWITCH experiment, written most
/// significant bit first with bits (LSB..MSB) control, reservoir A, work,
/// reservoir B. `bits_by_qubit` is indexed by qubit role.
std::string format_outcome_label(std::array<int, 4> bits_by_qubit);

/// Relabels a 4-qubit kQubitZeroFirst result into the kExperimentLabel order.
ShotResult to_experiment_labels(const ShotResult& r);

/// Product-state weights over basis inputs of the experiment: control in |0>,
/// each thermal qubit excited with probability q.
std::map<std::string, double> thermal_input_weights(double q_work, double q_reservoir_a,
                                                    double q_reservoir_b);

}  // namespace icofridge

#endif  // ICOFRIDGE_CIRCUIT_HPP
