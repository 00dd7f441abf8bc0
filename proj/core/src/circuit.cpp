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

#include "icofridge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "icofridge/rng.hpp"

namespace icofridge {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major

constexpr double kWeightSumTolerance = 1e-9;

std::size_t bit_mask(int qubit, int n_qubits) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

Mat2 one_qubit_matrix(GateKind kind) {
  const double h = 1.0 / std::numbers::sqrt2;
  const Complex t = std::polar(1.0, std::numbers::pi / 4.0);
  switch (kind) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: return {h, h, h, -h};
    case GateKind::T: return {1.0, 0.0, 0.0, t};
    case GateKind::TDG: return {1.0, 0.0, 0.0, std::conj(t)};
    default: throw std::logic_error("one_qubit_matrix: not a 1-qubit gate");
  }
}

void apply_mat2(const Mat2& m, int qubit, int n_qubits, std::span<Complex> amps) {
  const std::size_t mask = bit_mask(qubit, n_qubits);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | mask];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

// Swaps amplitude pairs (i, i ^ flip) for every i where `select(i)` holds.
template <typename Select>
void permute_pairs(std::span<Complex> amps, std::size_t flip, Select select) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (select(i)) std::swap(amps[i], amps[i ^ flip]);
  }
}

void apply_gate(const Gate& g, int n, std::span<Complex> amps) {
  auto m = [n](int q) { return bit_mask(q, n); };
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::T:
    case GateKind::TDG:
      apply_mat2(one_qubit_matrix(g.kind), q[0], n, amps);
      return;
    case GateKind::CNOT: {
      const auto c = m(q[0]), t = m(q[1]);
      permute_pairs(amps, t, [=](std::size_t i) { return (i & c) && !(i & t); });
      return;
    }
    case GateKind::SWAP: {
      const auto a = m(q[0]), b = m(q[1]);
      permute_pairs(amps, a | b, [=](std::size_t i) { return (i & a) && !(i & b); });
      return;
    }
    case GateKind::TOFFOLI: {
      const auto c1 = m(q[0]), c2 = m(q[1]), t = m(q[2]);
      permute_pairs(amps, t, [=](std::size_t i) { return (i & c1) && (i & c2) && !(i & t); });
      return;
    }
    case GateKind::CSWAP:
    case GateKind::ANTI_CSWAP: {
      const auto c = m(q[0]), a = m(q[1]), b = m(q[2]);
      const bool want = g.kind == GateKind::CSWAP;
      permute_pairs(amps, a | b, [=](std::size_t i) {
        return (static_cast<bool>(i & c) == want) && (i & a) && !(i & b);
      });
      return;
    }
  }
}

// rho -> M rho M^dagger for an operator given by a vector action.
template <typename Action>
void conjugate_density(ComplexMatrix& rho, Action act) {
  const std::size_t d = rho.rows();
  std::vector<Complex> col(d);
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = 0; r < d; ++r) col[r] = rho(r, c);
    act(std::span<Complex>(col));
    for (std::size_t r = 0; r < d; ++r) rho(r, c) = col[r];
  }
  // (rho M^dagger) row r == conj(M conj(row r))
  for (std::size_t r = 0; r < d; ++r) {
    auto row = rho.row(r);
    for (auto& z : row) z = std::conj(z);
    act(row);
    for (auto& z : row) z = std::conj(z);
  }
}

void apply_pauli_channel(ComplexMatrix& rho, int qubit, int n, const PauliProbabilities& p) {
  if (p.total() <= 0.0) return;
  const std::size_t mask = bit_mask(qubit, n);
  const std::size_t d = rho.rows();
  auto sign = [mask](std::size_t i) { return (i & mask) ? -1.0 : 1.0; };
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Complex flipped = rho(i ^ mask, j ^ mask);
      out(i, j) = (1.0 - p.total()) * rho(i, j) + p.x * flipped +
                  p.y * sign(i ^ mask) * sign(j ^ mask) * flipped +
                  p.z * sign(i) * sign(j) * rho(i, j);
    }
  }
  rho = std::move(out);
}

void apply_readout_channel(ComplexMatrix& rho, int qubit, int n, const ReadoutError& e) {
  if (e.p01 <= 0.0 && e.p10 <= 0.0) return;
  const std::array<Mat2, 4> kraus = {{
      {std::sqrt(1.0 - e.p01), 0.0, 0.0, 0.0},
      {0.0, 0.0, std::sqrt(e.p01), 0.0},
      {0.0, 0.0, 0.0, std::sqrt(1.0 - e.p10)},
      {0.0, std::sqrt(e.p10), 0.0, 0.0},
  }};
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& k : kraus) {
    ComplexMatrix term = rho;
    conjugate_density(term, [&](std::span<Complex> v) { apply_mat2(k, qubit, n, v); });
    out += term;
  }
  rho = std::move(out);
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string("NoiseSpec: ") + what + " must lie in [0, 1]");
  }
}

void check_pauli(const PauliProbabilities& p, const char* what) {
  check_probability(p.x, what);
  check_probability(p.y, what);
  check_probability(p.z, what);
  if (p.total() > 1.0) {
    throw std::invalid_argument(std::string("NoiseSpec: ") + what + " probabilities sum above 1");
  }
}

std::vector<double> cumulative(std::span<const double> probs) {
  std::vector<double> cdf(probs.size());
  std::partial_sum(probs.begin(), probs.end(), cdf.begin());
  return cdf;
}

// Index of the first bucket whose cumulative weight exceeds u * total.
std::size_t draw(const std::vector<double>& cdf, double u) {
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  if (it == cdf.end()) --it;
  // Skip over trailing zero-width buckets that upper_bound can land on.
  while (it != cdf.begin() && *it == *(it - 1)) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

ShotResult counts_to_result(const std::vector<std::uint64_t>& tally, int n_qubits,
                            std::uint64_t n_shots) {
  ShotResult r;
  r.n_shots = n_shots;
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (tally[i] > 0) r.counts.emplace(to_bitstring(i, n_qubits), tally[i]);
  }
  return r;
}

}  // namespace

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::T:
    case GateKind::TDG: return 1;
    case GateKind::CNOT:
    case GateKind::SWAP: return 2;
    case GateKind::TOFFOLI:
    case GateKind::CSWAP:
    case GateKind::ANTI_CSWAP: return 3;
  }
  return 0;
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::T: return "T";
    case GateKind::TDG: return "TDG";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::TOFFOLI: return "TOFFOLI";
    case GateKind::CSWAP: return "CSWAP";
    case GateKind::ANTI_CSWAP: return "ANTI_CSWAP";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (auto k : {GateKind::X, GateKind::H, GateKind::T, GateKind::TDG, GateKind::CNOT,
                 GateKind::SWAP, GateKind::TOFFOLI, GateKind::CSWAP, GateKind::ANTI_CSWAP}) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxSimulatedQubits) {
    throw std::invalid_argument("Circuit: qubit count must lie in [1, " +
                                std::to_string(kMaxSimulatedQubits) + "]");
  }
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : Circuit(n_qubits) {
  for (auto& g : gates) add(std::move(g));
}

Circuit& Circuit::add(Gate g) {
  const std::string name(gate_name(g.kind));
  if (static_cast<int>(g.qubits.size()) != arity(g.kind)) {
    throw std::invalid_argument("Circuit: " + name + " expects " + std::to_string(arity(g.kind)) +
                                " qubits, got " + std::to_string(g.qubits.size()));
  }
  for (std::size_t i = 0; i < g.qubits.size(); ++i) {
    if (g.qubits[i] < 0 || g.qubits[i] >= n_qubits_) {
      throw std::invalid_argument("Circuit: " + name + " qubit " + std::to_string(g.qubits[i]) +
                                  " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (g.qubits[i] == g.qubits[j]) {
        throw std::invalid_argument("Circuit: " + name + " repeats qubit " +
                                    std::to_string(g.qubits[i]));
      }
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits() != n_qubits_) throw std::invalid_argument("Circuit::append: width mismatch");
  for (const auto& g : other.gates()) add(g);
  return *this;
}

std::vector<std::string> Circuit::warnings() const {
  std::vector<std::string> w;
  if (n_qubits_ > kRecommendedMaxQubits) {
    w.push_back("circuit uses " + std::to_string(n_qubits_) + " qubits; the SWITCH experiment needs at most " +
                std::to_string(kRecommendedMaxQubits));
  }
  return w;
}

ComplexMatrix build_unitary(const Circuit& c) {
  const std::size_t d = std::size_t{1} << c.n_qubits();
  ComplexMatrix u(d, d);
  std::vector<Complex> column(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::fill(column.begin(), column.end(), Complex{});
    column[j] = 1.0;
    for (const auto& g : c.gates()) apply_gate(g, c.n_qubits(), column);
    for (std::size_t i = 0; i < d; ++i) u(i, j) = column[i];
  }
  return u;
}

Circuit switch_circuit_full() {
  Circuit c(4);
  c.add(GateKind::CSWAP, {kControlQubit, kWorkQubit, kReservoirAQubit})
      .add(GateKind::CSWAP, {kControlQubit, kWorkQubit, kReservoirBQubit})
      .add(GateKind::ANTI_CSWAP, {kControlQubit, kWorkQubit, kReservoirBQubit})
      .add(GateKind::ANTI_CSWAP, {kControlQubit, kWorkQubit, kReservoirAQubit});
  return c;
}

Circuit switch_circuit_simplified() {
  Circuit c(4);
  c.add(GateKind::CSWAP, {kControlQubit, kWorkQubit, kReservoirAQubit})
      .add(GateKind::SWAP, {kWorkQubit, kReservoirBQubit})
      .add(GateKind::ANTI_CSWAP, {kControlQubit, kWorkQubit, kReservoirAQubit});
  return c;
}

Circuit switch_experiment_circuit(const Circuit& switch_core) {
  Circuit c(switch_core.n_qubits());
  c.add(GateKind::H, {kControlQubit});
  c.append(switch_core);
  c.add(GateKind::H, {kControlQubit});
  return c;
}

std::vector<Gate> decompose_cswap(const Gate& g) {
  if (g.kind != GateKind::CSWAP && g.kind != GateKind::ANTI_CSWAP) {
    throw std::invalid_argument("decompose_cswap: expected CSWAP or ANTI_CSWAP, got " +
                                std::string(gate_name(g.kind)));
  }
  if (g.qubits.size() != 3) throw std::invalid_argument("decompose_cswap: expected 3 qubits");
  const int c = g.qubits[0], a = g.qubits[1], b = g.qubits[2];
  std::vector<Gate> out;
  if (g.kind == GateKind::ANTI_CSWAP) out.push_back({GateKind::X, {c}});
  out.push_back({GateKind::CNOT, {b, a}});
  out.push_back({GateKind::TOFFOLI, {c, a, b}});
  out.push_back({GateKind::CNOT, {b, a}});
  if (g.kind == GateKind::ANTI_CSWAP) out.push_back({GateKind::X, {c}});
  return out;
}

std::vector<Gate> decompose_toffoli(const Gate& g) {
  if (g.kind != GateKind::TOFFOLI || g.qubits.size() != 3) {
    throw std::invalid_argument("decompose_toffoli: expected a TOFFOLI gate");
  }
  const int a = g.qubits[0], b = g.qubits[1], t = g.qubits[2];
  return {
      {GateKind::H, {t}},        {GateKind::CNOT, {b, t}}, {GateKind::TDG, {t}},
      {GateKind::CNOT, {a, t}},  {GateKind::T, {t}},       {GateKind::CNOT, {b, t}},
      {GateKind::TDG, {t}},      {GateKind::CNOT, {a, t}}, {GateKind::T, {b}},
      {GateKind::T, {t}},        {GateKind::H, {t}},       {GateKind::CNOT, {a, b}},
      {GateKind::T, {a}},        {GateKind::TDG, {b}},     {GateKind::CNOT, {a, b}},
  };
}

Circuit decompose_to_two_qubit(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::CSWAP || g.kind == GateKind::ANTI_CSWAP) {
      for (const auto& step : decompose_cswap(g)) {
        if (step.kind == GateKind::TOFFOLI) {
          for (const auto& low : decompose_toffoli(step)) out.add(low);
        } else {
          out.add(step);
        }
      }
    } else if (g.kind == GateKind::TOFFOLI) {
      for (const auto& low : decompose_toffoli(g)) out.add(low);
    } else {
      out.add(g);
    }
  }
  return out;
}

GateMetrics gate_metrics(const Circuit& c) {
  GateMetrics m;
  std::vector<int> next_free(static_cast<std::size_t>(c.n_qubits()), 0);
  for (const auto& g : c.gates()) {
    int layer = 0;
    for (int q : g.qubits) layer = std::max(layer, next_free[static_cast<std::size_t>(q)]);
    for (int q : g.qubits) next_free[static_cast<std::size_t>(q)] = layer + 1;
    m.depth = std::max(m.depth, layer + 1);
    ++m.total_gates;
    if (arity(g.kind) == 2) ++m.two_qubit_gates;
  }
  return m;
}

void NoiseSpec::validate(int n_qubits) const {
  check_pauli(after_1q, "1-qubit Pauli error");
  check_pauli(after_2q, "2-qubit Pauli error");
  if (!readout.empty() && readout.size() != 1 && static_cast<int>(readout.size()) != n_qubits) {
    throw std::invalid_argument("NoiseSpec: readout list must have 0, 1 or " +
                                std::to_string(n_qubits) + " entries");
  }
  for (const auto& r : readout) {
    check_probability(r.p01, "readout p01");
    check_probability(r.p10, "readout p10");
  }
}

ReadoutError NoiseSpec::readout_for(int qubit) const {
  if (readout.empty()) return {};
  if (readout.size() == 1) return readout.front();
  return readout.at(static_cast<std::size_t>(qubit));
}

bool NoiseSpec::is_trivial() const {
  const bool readout_clean = std::all_of(readout.begin(), readout.end(), [](const ReadoutError& r) {
    return r.p01 == 0.0 && r.p10 == 0.0;
  });
  return after_1q.total() == 0.0 && after_2q.total() == 0.0 && readout_clean;
}

DensityMatrix evolve_density(const Circuit& c, const DensityMatrix& rho_in,
                             const std::optional<NoiseSpec>& noise) {
  const int n = c.n_qubits();
  if (rho_in.dim() != (std::size_t{1} << n)) {
    throw std::invalid_argument("evolve_density: input state dimension does not match circuit width");
  }
  ComplexMatrix rho = rho_in.matrix();
  if (!noise) {
    for (const auto& g : c.gates()) {
      conjugate_density(rho, [&](std::span<Complex> v) { apply_gate(g, n, v); });
    }
    return DensityMatrix(std::move(rho));
  }

  noise->validate(n);
  const Circuit lowered = decompose_to_two_qubit(c);
  for (const auto& g : lowered.gates()) {
    conjugate_density(rho, [&](std::span<Complex> v) { apply_gate(g, n, v); });
    const auto& p = arity(g.kind) == 1 ? noise->after_1q : noise->after_2q;
    for (int q : g.qubits) apply_pauli_channel(rho, q, n, p);
  }
  for (int q = 0; q < n; ++q) apply_readout_channel(rho, q, n, noise->readout_for(q));
  return DensityMatrix(std::move(rho));
}

std::vector<double> outcome_distribution(const Circuit& c, std::uint64_t input_index,
                                         const std::optional<NoiseSpec>& noise) {
  const std::size_t d = std::size_t{1} << c.n_qubits();
  if (input_index >= d) throw std::invalid_argument("outcome_distribution: input index out of range");
  std::vector<double> probs(d);
  if (!noise) {
    std::vector<Complex> amps(d);
    amps[input_index] = 1.0;
    for (const auto& g : c.gates()) apply_gate(g, c.n_qubits(), amps);
    for (std::size_t i = 0; i < d; ++i) probs[i] = std::norm(amps[i]);
    return probs;
  }
  const auto rho = evolve_density(c, DensityMatrix::basis_state(d, input_index), noise);
  for (std::size_t i = 0; i < d; ++i) probs[i] = std::max(0.0, rho.population(i));
  return probs;
}

std::uint64_t parse_bitstring(std::string_view bits, int n_qubits) {
  if (static_cast<int>(bits.size()) != n_qubits) {
    throw std::invalid_argument("bitstring '" + std::string(bits) + "' has length " +
                                std::to_string(bits.size()) + ", expected " + std::to_string(n_qubits));
  }
  std::uint64_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("bitstring '" + std::string(bits) + "' contains a non-binary digit");
    }
    index = (index << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return index;
}

std::string to_bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int k = 0; k < n_qubits; ++k) {
    if (index & bit_mask(k, n_qubits)) s[static_cast<std::size_t>(k)] = '1';
  }
  return s;
}

ShotResult simulate_shots(const Circuit& c, std::string_view input_basis_state,
                          const std::optional<NoiseSpec>& noise, std::uint64_t n_shots,
                          std::uint64_t seed) {
  if (n_shots == 0) throw std::invalid_argument("simulate_shots: n_shots must be positive");
  const auto input = parse_bitstring(input_basis_state, c.n_qubits());
  const auto cdf = cumulative(outcome_distribution(c, input, noise));
  std::vector<std::uint64_t> tally(cdf.size(), 0);
  for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
    auto rng = SplitMix64::substream(seed, shot);
    ++tally[draw(cdf, rng.uniform())];
  }
  return counts_to_result(tally, c.n_qubits(), n_shots);
}

ShotResult mixed_input_run(const Circuit& c, const std::map<std::string, double>& weights,
                           const std::optional<NoiseSpec>& noise, std::uint64_t n_shots,
                           std::uint64_t seed) {
  if (n_shots == 0) throw std::invalid_argument("mixed_input_run: n_shots must be positive");
  if (weights.empty()) throw std::invalid_argument("mixed_input_run: no input weights");

  std::vector<std::uint64_t> inputs;
  std::vector<double> input_weights;
  double total = 0.0;
  for (const auto& [bits, w] : weights) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw std::invalid_argument("mixed_input_run: weight for '" + bits + "' is not a probability");
    }
    inputs.push_back(parse_bitstring(bits, c.n_qubits()));
    input_weights.push_back(w);
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument("mixed_input_run: weights sum to " + std::to_string(total) +
                                ", expected 1");
  }

  const auto input_cdf = cumulative(input_weights);
  std::vector<std::vector<double>> output_cdfs(inputs.size());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (input_weights[k] > 0.0) output_cdfs[k] = cumulative(outcome_distribution(c, inputs[k], noise));
  }

  std::vector<std::uint64_t> tally(std::size_t{1} << c.n_qubits(), 0);
  for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
    auto rng = SplitMix64::substream(seed, shot);
    const double u_out = rng.uniform();
    const double u_in = rng.uniform();
    const std::size_t k = draw(input_cdf, u_in);
    ++tally[draw(output_cdfs[k], u_out)];
  }
  return counts_to_result(tally, c.n_qubits(), n_shots);
}

std::string format_outcome_label(std::array<int, 4> bits_by_qubit) {
  for (int b : bits_by_qubit) {
    if (b != 0 && b != 1) throw std::invalid_argument("format_outcome_label: bits must be 0 or 1");
  }
  // Most significant first: reservoir B, work, reservoir A, control.
  const std::array<int, 4> order = {kReservoirBQubit, kWorkQubit, kReservoirAQubit, kControlQubit};
  std::string label;
  for (int q : order) label.push_back(static_cast<char>('0' + bits_by_qubit[static_cast<std::size_t>(q)]));
  return label;
}

ShotResult to_experiment_labels(const ShotResult& r) {
  if (r.bit_order != BitOrder::kQubitZeroFirst) {
    throw std::invalid_argument("to_experiment_labels: result is already relabelled");
  }
  ShotResult out;
  out.n_shots = r.n_shots;
  out.bit_order = BitOrder::kExperimentLabel;
  for (const auto& [bits, n] : r.counts) {
    if (bits.size() != 4) throw std::invalid_argument("to_experiment_labels: expected 4-qubit outcomes");
    std::array<int, 4> by_qubit{};
    for (std::size_t q = 0; q < 4; ++q) by_qubit[q] = bits[q] - '0';
    out.counts[format_outcome_label(by_qubit)] += n;
  }
  return out;
}

std::map<std::string, double> thermal_input_weights(double q_work, double q_reservoir_a,
                                                    double q_reservoir_b) {
  std::map<std::string, double> w;
  for (int bw = 0; bw < 2; ++bw) {
    for (int ba = 0; ba < 2; ++ba) {
      for (int bb = 0; bb < 2; ++bb) {
        const double p = (bw ? q_work : 1.0 - q_work) * (ba ? q_reservoir_a : 1.0 - q_reservoir_a) *
                         (bb ? q_reservoir_b : 1.0 - q_reservoir_b);
        std::string label = "0";
        label.push_back(static_cast<char>('0' + bw));
        label.push_back(static_cast<char>('0' + ba));
        label.push_back(static_cast<char>('0' + bb));
        w[label] = p;
      }
    }
  }
  return w;
}

}  // namespace icofridge
