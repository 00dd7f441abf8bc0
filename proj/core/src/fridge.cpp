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

#include "icofridge/fridge.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace icofridge {

namespace {

constexpr double kAbsentBranchProbability = 1e-14;

double excited(double beta) { return ThermalSpec{beta}.excited_population(); }

DensityMatrix prepared_input(double beta, const std::optional<InitNoiseParams>& init) {
  if (!init) return thermal_state(beta);
  return mix(init->p_init_suc, thermal_state(beta), thermal_state(init->beta_fail));
}

const DensityMatrix& branch_state(const ConditionalOutcome& out, ControlOutcome which) {
  const auto& state = which == ControlOutcome::kPlus ? out.plus_state : out.minus_state;
  if (!state) {
    throw std::invalid_argument("run_cycle: forced " + std::string(to_string(which)) +
                                " outcome has zero probability");
  }
  return *state;
}

CycleRecord cycle_from_outcome(const ConditionalOutcome& out, const FridgeConfig& cfg,
                               ControlOutcome which) {
  const DensityMatrix& work = branch_state(out, which);
  const double q_work = work.population(1);
  const double q_cold = excited(cfg.beta_cold);
  const double q_hot = excited(cfg.beta_hot);

  CycleRecord rec;
  rec.control_outcome = which;
  rec.beta_work_after_switch = effective_beta(work);
  if (which == ControlOutcome::kPlus) {
    rec.heat_from_cold = q_cold - q_work;
    rec.heat_to_hot = 0.0;
  } else {
    rec.heat_to_hot = q_work - q_hot;
    rec.heat_from_cold = q_cold - q_hot;
  }
  rec.beta_work_end = cfg.beta_cold;
  return rec;
}

ControlOutcome sample_outcome(const ConditionalOutcome& out, SplitMix64& rng) {
  const double total = out.plus_prob + out.minus_prob;
  if (!out.minus_state) return ControlOutcome::kPlus;
  if (!out.plus_state) return ControlOutcome::kMinus;
  return rng.uniform() * total < out.plus_prob ? ControlOutcome::kPlus : ControlOutcome::kMinus;
}

BranchMarginals branch_marginals(const ComplexMatrix& block) {
  BranchMarginals b;
  b.prob = trace(block).real();
  if (b.prob <= kAbsentBranchProbability) {
    b.beta.fill(std::numeric_limits<double>::quiet_NaN());
    return b;
  }
  const ComplexMatrix normalized = block * Complex(1.0 / b.prob);
  for (std::size_t k = 0; k < 3; ++k) {
    b.qubits.emplace_back(partial_trace(normalized, {2, 2, 2}, {k}));
    b.beta[k] = effective_beta(b.qubits.back());
  }
  return b;
}

}  // namespace

void NoiseModel::validate() const {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (simple && (!in_unit(simple->p_suc) || !in_unit(simple->rho_fail_excited_pop))) {
    throw std::invalid_argument("simple noise: p_suc and fail population must lie in [0, 1]");
  }
  if (init && !in_unit(init->p_init_suc)) {
    throw std::invalid_argument("init noise: p_init_suc must lie in [0, 1]");
  }
  if (init && !std::isfinite(init->beta_fail)) {
    throw std::invalid_argument("init noise: beta_fail must be finite");
  }
  if (gate_level) gate_level->validate(4);
}

std::string NoiseModel::name() const {
  std::string s;
  auto append = [&s](const char* part) {
    if (!s.empty()) s += '+';
    s += part;
  };
  if (simple) append("simple");
  if (init) append("with_init");
  if (gate_level) append("gate_level");
  return s.empty() ? "none" : s;
}

std::string_view to_string(ControlOutcome o) { return o == ControlOutcome::kPlus ? "plus" : "minus"; }

void FridgeConfig::validate() const {
  if (std::isnan(beta_cold) || std::isnan(beta_hot)) {
    throw std::invalid_argument("fridge config: temperatures must not be NaN");
  }
  if (!(beta_hot < beta_cold)) {
    throw std::invalid_argument("fridge config: beta_hot must be smaller than beta_cold");
  }
  noise.validate();
}

ConditionalOutcome cooling_step(double beta_reservoir, double beta_work, const NoiseModel& noise) {
  noise.validate();
  ConditionalOutcome out;
  if (noise.gate_level) {
    const auto final_state = run_switch_experiment(beta_reservoir, beta_work, noise.gate_level, noise.init);
    auto marg = conditional_marginals(final_state);
    out.plus_prob = marg.plus.prob;
    out.minus_prob = marg.minus.prob;
    if (!marg.plus.qubits.empty()) out.plus_state = marg.plus.qubits.front();
    if (!marg.minus.qubits.empty()) out.minus_state = marg.minus.qubits.front();
  } else {
    out = conditional_thermal_output(prepared_input(beta_reservoir, noise.init),
                                     prepared_input(beta_work, noise.init));
  }

  if (noise.simple) {
    const auto fail = population_state(noise.simple->rho_fail_excited_pop);
    if (out.plus_state) out.plus_state = mix(noise.simple->p_suc, *out.plus_state, fail);
    if (out.minus_state) out.minus_state = mix(noise.simple->p_suc, *out.minus_state, fail);
  }
  return out;
}

ConditionalOutcome ico_cooling_step(double beta_in, const NoiseModel& noise) {
  return cooling_step(beta_in, beta_in, noise);
}

double plus_branch_beta(double beta_in, const NoiseModel& noise) {
  const auto out = ico_cooling_step(beta_in, noise);
  if (!out.plus_state) return std::numeric_limits<double>::quiet_NaN();
  return effective_beta(*out.plus_state);
}

CycleRecord run_cycle(double beta_work_start, const FridgeConfig& cfg, SplitMix64& rng) {
  cfg.validate();
  const auto out = cooling_step(cfg.beta_cold, beta_work_start, cfg.noise);
  return cycle_from_outcome(out, cfg, sample_outcome(out, rng));
}

CycleRecord run_cycle_with_outcome(double beta_work_start, const FridgeConfig& cfg,
                                   ControlOutcome outcome) {
  cfg.validate();
  return cycle_from_outcome(cooling_step(cfg.beta_cold, beta_work_start, cfg.noise), cfg, outcome);
}

std::vector<CycleRecord> run_cycles(const FridgeConfig& cfg, std::uint64_t n_cycles) {
  cfg.validate();
  // Every cycle starts from beta_cold, so the step outcome is shared.
  const auto out = cooling_step(cfg.beta_cold, cfg.beta_cold, cfg.noise);
  std::vector<CycleRecord> records;
  records.reserve(n_cycles);
  for (std::uint64_t i = 0; i < n_cycles; ++i) {
    auto rng = SplitMix64::substream(cfg.seed, i);
    records.push_back(cycle_from_outcome(out, cfg, sample_outcome(out, rng)));
  }
  return records;
}

CycleSummary summarize(const std::vector<CycleRecord>& records) {
  CycleSummary s;
  s.n_cycles = records.size();
  if (records.empty()) return s;
  double sum_c = 0.0, sum_h = 0.0;
  for (const auto& r : records) {
    sum_c += r.heat_from_cold;
    sum_h += r.heat_to_hot;
    if (r.control_outcome == ControlOutcome::kPlus) ++s.n_plus;
  }
  const double n = static_cast<double>(records.size());
  s.mean_heat_from_cold = sum_c / n;
  s.mean_heat_to_hot = sum_h / n;
  if (records.size() > 1) {
    double ss_c = 0.0, ss_h = 0.0;
    for (const auto& r : records) {
      ss_c += (r.heat_from_cold - s.mean_heat_from_cold) * (r.heat_from_cold - s.mean_heat_from_cold);
      ss_h += (r.heat_to_hot - s.mean_heat_to_hot) * (r.heat_to_hot - s.mean_heat_to_hot);
    }
    s.stderr_heat_from_cold = std::sqrt(ss_c / (n - 1.0) / n);
    s.stderr_heat_to_hot = std::sqrt(ss_h / (n - 1.0) / n);
  }
  return s;
}

double expected_heat_from_cold(const FridgeConfig& cfg) {
  cfg.validate();
  const auto out = cooling_step(cfg.beta_cold, cfg.beta_cold, cfg.noise);
  double e = 0.0;
  if (out.plus_state) e += out.plus_prob * cycle_from_outcome(out, cfg, ControlOutcome::kPlus).heat_from_cold;
  if (out.minus_state) e += out.minus_prob * cycle_from_outcome(out, cfg, ControlOutcome::kMinus).heat_from_cold;
  return e;
}

double expected_heat_to_hot(const FridgeConfig& cfg) {
  cfg.validate();
  const auto out = cooling_step(cfg.beta_cold, cfg.beta_cold, cfg.noise);
  if (!out.minus_state) return 0.0;
  return out.minus_prob * cycle_from_outcome(out, cfg, ControlOutcome::kMinus).heat_to_hot;
}

std::vector<double> trajectory_all_plus(double beta_start, int n_steps, const NoiseModel& noise) {
  if (n_steps < 0) throw std::invalid_argument("trajectory_all_plus: n_steps must be nonnegative");
  std::vector<double> betas{beta_start};
  betas.reserve(static_cast<std::size_t>(n_steps) + 1);
  for (int k = 0; k < n_steps; ++k) betas.push_back(plus_branch_beta(betas.back(), noise));
  return betas;
}

FixedPointResult fixed_point_beta(const NoiseModel& noise, const FixedPointOptions& opts) {
  if (!(opts.bracket_lo < opts.bracket_hi)) {
    throw std::invalid_argument("fixed_point_beta: bracket must satisfy lo < hi");
  }
  auto g = [&](double beta) { return plus_branch_beta(beta, noise) - beta; };
  double lo = opts.bracket_lo, hi = opts.bracket_hi;
  double g_lo = g(lo);
  const double g_hi = g(hi);

  FixedPointResult r;
  if (g_lo == 0.0) return {true, lo, 0.0, 0};
  if (g_hi == 0.0) return {true, hi, 0.0, 0};
  if (std::isnan(g_lo) || std::isnan(g_hi) || (g_lo > 0.0) == (g_hi > 0.0)) return r;

  while (hi - lo > opts.tolerance && r.iterations < opts.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    ++r.iterations;
    if (g_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  r.found = true;
  r.beta = 0.5 * (lo + hi);
  r.residual = std::abs(g(r.beta));
  return r;
}

CycleEstimate cycles_to_target(double beta_start, double beta_target, const NoiseModel& noise,
                               int max_steps) {
  CycleEstimate est;
  if (beta_target <= beta_start) return {true, 0, 1.0, 1.0};

  if (!noise.is_noiseless()) {
    const auto fp = fixed_point_beta(noise);
    if (fp.found && beta_start < fp.beta && beta_target >= fp.beta) return est;
  }

  double beta = beta_start;
  double exact = 1.0;
  for (int n = 1; n <= max_steps; ++n) {
    const auto out = ico_cooling_step(beta, noise);
    if (!out.plus_state || out.plus_prob <= 0.0) return est;
    exact /= out.plus_prob;
    const double next = effective_beta(*out.plus_state);
    if (next >= beta_target) return {true, n, exact, std::ldexp(1.0, n)};
    if (!(next > beta)) return est;
    beta = next;
  }
  return est;
}

DensityMatrix run_switch_experiment(double beta_reservoir, double beta_work,
                                    const std::optional<NoiseSpec>& noise,
                                    const std::optional<InitNoiseParams>& init,
                                    const Circuit& switch_core) {
  if (switch_core.n_qubits() != 4) {
    throw std::invalid_argument("run_switch_experiment: SWITCH circuit must have 4 qubits");
  }
  const auto reservoir = prepared_input(beta_reservoir, init);
  const auto rho_in = kron(kron(kron(DensityMatrix::basis_state(2, 0), prepared_input(beta_work, init)),
                                reservoir),
                           reservoir);
  return evolve_density(switch_experiment_circuit(switch_core), rho_in, noise);
}

ConditionalMarginals conditional_marginals(const DensityMatrix& final_state) {
  if (final_state.dim() != 16) {
    throw std::invalid_argument("conditional_marginals: expected a 4-qubit experiment state");
  }
  const auto& m = final_state.matrix();
  auto block = [&](std::size_t control_bit) {
    ComplexMatrix b(8, 8);
    const std::size_t off = control_bit * 8;
    for (std::size_t r = 0; r < 8; ++r) {
      for (std::size_t c = 0; c < 8; ++c) b(r, c) = m(off + r, off + c);
    }
    return b;
  };
  return {branch_marginals(block(0)), branch_marginals(block(1))};
}

ConditionalMarginals conditional_marginals(double beta_in, const std::optional<NoiseSpec>& noise,
                                           const Circuit& switch_core) {
  return conditional_marginals(run_switch_experiment(beta_in, beta_in, noise, std::nullopt, switch_core));
}

}  // namespace icofridge
