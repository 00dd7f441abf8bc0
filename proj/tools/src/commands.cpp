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

#include "icofridge/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "icofridge/circuit_io.hpp"
#include "icofridge/fridge.hpp"
#include "icofridge/ico_switch.hpp"
#include "icofridge/rng.hpp"

namespace icofridge::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = s.find(',');
    const auto part = trim(s.substr(0, pos));
    if (part.empty()) throw ConfigError("empty entry in list '" + std::string(s) + "'");
    out.emplace_back(part);
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<double> beta_grid(const ScenarioConfig& cfg) {
  if (cfg.has("beta_grid")) return cfg.get_real_list("beta_grid");
  const double lo = cfg.get_real("beta_min", 0.0);
  const double hi = cfg.get_real("beta_max", 3.0);
  const auto n = cfg.get_count("beta_points", 31);
  if (n == 0) throw ConfigError("beta_points must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
    throw ConfigError("beta_min and beta_max must be finite with beta_min <= beta_max");
  }
  std::vector<double> grid;
  for (std::uint64_t i = 0; i < n; ++i) {
    grid.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return grid;
}

Cell beta_of(const std::optional<DensityMatrix>& rho) {
  if (!rho) return std::monostate{};
  return effective_beta(*rho);
}

Cell splitting(const ConditionalOutcome& out) {
  if (!out.plus_state || !out.minus_state) return std::monostate{};
  const double bp = effective_beta(*out.plus_state);
  const double bm = effective_beta(*out.minus_state);
  if (bp == bm) return 0.0;
  return std::abs(bp - bm);
}

std::int64_t as_int(std::uint64_t n) { return static_cast<std::int64_t>(n); }

// Ginibre sample G G^dag / tr.
DensityMatrix random_qubit_state(SplitMix64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix rho = g * dagger(g);
  rho *= Complex(1.0 / trace(rho).real());
  return DensityMatrix(std::move(rho));
}

ComplexMatrix random_qubit_unitary(SplitMix64& rng) {
  const double theta = std::numbers::pi * rng.uniform();
  const double a = 2 * std::numbers::pi * rng.uniform();
  const double b = 2 * std::numbers::pi * rng.uniform();
  const Complex ea = std::polar(1.0, a), eb = std::polar(1.0, b);
  return ComplexMatrix{{std::cos(theta) * ea, -std::sin(theta) * eb},
                       {std::sin(theta) * std::conj(eb), std::cos(theta) * std::conj(ea)}};
}

KrausChannel random_unitary_mixture(SplitMix64& rng) {
  const double p = rng.uniform();
  return KrausChannel({random_qubit_unitary(rng) * Complex(std::sqrt(p)),
                       random_qubit_unitary(rng) * Complex(std::sqrt(1.0 - p))});
}

std::string experiment_label(std::uint64_t index) {
  const auto bits = to_bitstring(index, 4);
  return format_outcome_label({bits[0] - '0', bits[1] - '0', bits[2] - '0', bits[3] - '0'});
}

Circuit histogram_circuit(const std::string& name) {
  if (name == "simplified") return switch_experiment_circuit(switch_circuit_simplified());
  if (name == "full") return switch_experiment_circuit(switch_circuit_full());
  if (name == "identity") return Circuit(4);
  throw ConfigError("circuit must be simplified, full or identity, got '" + name + "'");
}

int basis_bit(const ScenarioConfig& cfg, const std::string& key, std::uint64_t fallback) {
  const auto v = cfg.get_count(key, fallback);
  if (v > 1) throw ConfigError("bad basis state: " + key + " must be 0 or 1");
  return static_cast<int>(v);
}

class CheckTable {
 public:
  explicit CheckTable(Report& r) : r_(r) { r_.columns = {"check", "max_error", "tolerance", "status"}; }

  void add(const std::string& name, double error, double tol) {
    const bool pass = error <= tol;
    r_.ok = r_.ok && pass;
    r_.add_row({name, error, tol, std::string(pass ? "pass" : "fail")});
  }

 private:
  Report& r_;
};

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"sweep", "trajectory", "histogram", "noise-compare", "cycle-mc",
                                                 "verify"};
  return names;
}

Report cmd_sweep(const ScenarioConfig& cfg) {
  Report r;
  r.command = "sweep";
  const auto grid = beta_grid(cfg);
  std::vector<std::pair<std::string, NoiseModel>> models;
  if (cfg.has("sweep.models")) {
    for (const auto& name : split_names(cfg.get_string("sweep.models", ""))) {
      models.emplace_back(name, noise_model_from_config(cfg, name));
    }
  }

  r.columns = {"beta_in", "beta_out_plus", "beta_out_minus", "beta_out_classical", "p_plus"};
  for (const auto& [name, model] : models) {
    for (const char* col : {"beta_out_plus", "beta_out_minus", "p_plus"}) r.columns.push_back(name + "." + col);
  }
  for (double beta : grid) {
    const auto ideal = ico_cooling_step(beta, NoiseModel{});
    std::vector<Cell> row = {beta, beta_of(ideal.plus_state), beta_of(ideal.minus_state), beta, ideal.plus_prob};
    for (const auto& [name, model] : models) {
      const auto out = ico_cooling_step(beta, model);
      row.insert(row.end(), {beta_of(out.plus_state), beta_of(out.minus_state), out.plus_prob});
    }
    r.add_row(std::move(row));
  }
  return r;
}

Report cmd_trajectory(const ScenarioConfig& cfg) {
  Report r;
  r.command = "trajectory";
  const double start = cfg.get_real("beta_start", 0.5);
  const auto steps = cfg.get_count("steps", 30);
  const auto noise = noise_model_from_config(cfg, cfg.get_string("noise", "none"));
  FixedPointOptions fp_opts;
  fp_opts.bracket_lo = cfg.get_real("fixed_point.lo", fp_opts.bracket_lo);
  fp_opts.bracket_hi = cfg.get_real("fixed_point.hi", fp_opts.bracket_hi);
  fp_opts.tolerance = cfg.get_real("fixed_point.tolerance", fp_opts.tolerance);
  if (!(fp_opts.bracket_lo < fp_opts.bracket_hi) || !(fp_opts.tolerance > 0.0)) {
    throw ConfigError("fixed_point.lo must be below fixed_point.hi and the tolerance positive");
  }
  if (steps > 100000) throw ConfigError("steps must be at most 100000");

  const auto betas = trajectory_all_plus(start, static_cast<int>(steps), noise);
  r.columns = {"step", "beta", "p_plus", "expected_cycles_exact", "expected_cycles_approx"};
  double exact = 1.0;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const double p_plus = ico_cooling_step(betas[k], noise).plus_prob;
    r.add_row({static_cast<std::int64_t>(k), betas[k], p_plus, exact, std::ldexp(1.0, static_cast<int>(k))});
    exact /= p_plus;
  }

  const auto fp = fixed_point_beta(noise, fp_opts);
  r.add_summary("fixed_point_found", fp.found);
  r.add_summary("fixed_point_beta", fp.found ? Cell(fp.beta) : Cell(std::monostate{}));
  r.add_summary("fixed_point_residual", fp.found ? Cell(fp.residual) : Cell(std::monostate{}));
  r.add_summary("fixed_point_iterations", static_cast<std::int64_t>(fp.iterations));

  if (cfg.has("target_beta")) {
    const auto est = cycles_to_target(start, cfg.get_real("target_beta", 0.0), noise);
    r.add_summary("target_reachable", est.reachable);
    r.add_summary("target_n_ideal", est.reachable ? Cell(std::int64_t{est.n_ideal}) : Cell(std::monostate{}));
    r.add_summary("target_expected_cycles_exact",
                  est.reachable ? Cell(est.expected_cycles_exact) : Cell(std::monostate{}));
    r.add_summary("target_expected_cycles_approx",
                  est.reachable ? Cell(est.expected_cycles_approx) : Cell(std::monostate{}));
  }
  return r;
}

Report cmd_histogram(const ScenarioConfig& cfg, std::uint64_t seed) {
  Report r;
  r.command = "histogram";
  const auto circuit = histogram_circuit(cfg.get_string("circuit", "simplified"));
  const auto shots = cfg.get_count("shots", 100000);
  if (shots == 0) throw ConfigError("shots must be positive");
  const auto input = cfg.get_string("input", "basis");
  const auto spec = noise_spec_from_config(cfg);
  const bool noisy = !spec.is_trivial();

  std::map<std::string, double> weights;
  if (input == "basis") {
    std::string bits = "0";
    bits += static_cast<char>('0' + basis_bit(cfg, "input.work", 1));
    bits += static_cast<char>('0' + basis_bit(cfg, "input.reservoir_a", 0));
    bits += static_cast<char>('0' + basis_bit(cfg, "input.reservoir_b", 0));
    weights[bits] = 1.0;
    r.add_summary("input_state", bits);
  } else if (input == "thermal") {
    const double q = ThermalSpec{cfg.get_real("beta_in", 1.0)}.excited_population();
    weights = thermal_input_weights(q, q, q);
  } else {
    throw ConfigError("input must be basis or thermal, got '" + input + "'");
  }

  auto exact_distribution = [&](const std::optional<NoiseSpec>& noise) {
    std::vector<double> p(16, 0.0);
    for (const auto& [bits, w] : weights) {
      const auto d = outcome_distribution(circuit, parse_bitstring(bits, 4), noise);
      for (std::size_t i = 0; i < 16; ++i) p[i] += w * d[i];
    }
    return p;
  };

  const auto ideal_p = exact_distribution(std::nullopt);
  const auto ideal = to_experiment_labels(mixed_input_run(circuit, weights, std::nullopt, shots, seed));
  std::vector<double> noisy_p;
  ShotResult noisy_counts;
  if (noisy) {
    noisy_p = exact_distribution(spec);
    noisy_counts = to_experiment_labels(mixed_input_run(circuit, weights, spec, shots, seed));
  }

  r.columns = {"outcome", "probability", "counts"};
  if (noisy) r.columns.insert(r.columns.end(), {"probability_noisy", "counts_noisy"});
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < 16; ++i) order.emplace_back(experiment_label(i), i);
  std::sort(order.begin(), order.end());
  auto count = [](const ShotResult& s, const std::string& label) {
    const auto it = s.counts.find(label);
    return as_int(it == s.counts.end() ? 0 : it->second);
  };
  for (const auto& [label, i] : order) {
    std::vector<Cell> row = {label, ideal_p[i], count(ideal, label)};
    if (noisy) row.insert(row.end(), {noisy_p[i], count(noisy_counts, label)});
    r.add_row(std::move(row));
  }
  r.add_summary("bit_order", std::string("reservoir_b,work,reservoir_a,control"));
  r.add_summary("shots", as_int(shots));
  return r;
}

Report cmd_histogram(const ScenarioConfig& cfg) { return cmd_histogram(cfg, cfg.get_count("seed", 0)); }

Report cmd_noise_compare(const ScenarioConfig& cfg) {
  Report r;
  r.command = "noise-compare";
  const double beta = cfg.get_real("beta_in", 0.0);
  const auto names = split_names(cfg.get_string("compare.models", "none,simple,with_init"));
  r.columns = {"model", "beta_out_plus", "beta_out_minus", "splitting", "p_plus"};
  for (const auto& name : names) {
    const auto model = noise_model_from_config(cfg, name);
    const auto out = ico_cooling_step(beta, model);
    r.add_row({model.name(), beta_of(out.plus_state), beta_of(out.minus_state), splitting(out), out.plus_prob});
  }
  return r;
}

Report cmd_cycle_mc(const ScenarioConfig& cfg) {
  Report r;
  r.command = "cycle-mc";
  const auto fridge = fridge_config_from_config(cfg);
  const auto n = cfg.get_count("cycles", 10000);
  const bool records = cfg.get_bool("records", true);
  if (n == 0) throw ConfigError("cycles must be positive");

  const auto log = run_cycles(fridge, n);
  if (records) {
    r.columns = {"cycle", "outcome", "beta_work_after_switch", "heat_from_cold", "heat_to_hot", "beta_work_end"};
    for (std::size_t i = 0; i < log.size(); ++i) {
      const auto& c = log[i];
      r.add_row({static_cast<std::int64_t>(i), std::string(to_string(c.control_outcome)), c.beta_work_after_switch,
                 c.heat_from_cold, c.heat_to_hot, c.beta_work_end});
    }
  }
  const auto s = summarize(log);
  r.add_summary("n_cycles", as_int(s.n_cycles));
  r.add_summary("n_plus", as_int(s.n_plus));
  r.add_summary("mean_heat_from_cold", s.mean_heat_from_cold);
  r.add_summary("stderr_heat_from_cold", s.stderr_heat_from_cold);
  r.add_summary("mean_heat_to_hot", s.mean_heat_to_hot);
  r.add_summary("stderr_heat_to_hot", s.stderr_heat_to_hot);
  r.add_summary("expected_heat_from_cold", expected_heat_from_cold(fridge));
  r.add_summary("expected_heat_to_hot", expected_heat_to_hot(fridge));
  return r;
}

Report cmd_verify(const ScenarioConfig& cfg, const RunOptions& opts) {
  Report r;
  r.command = "verify";
  const auto seed = cfg.get_count("seed", 0);
  const auto samples = cfg.get_count("verify.samples", 100);
  CheckTable checks(r);

  const auto full = build_unitary(switch_circuit_full());
  checks.add("circuit_identity", max_abs_diff(full, build_unitary(switch_circuit_simplified())), 1e-12);

  for (auto kind : {GateKind::CSWAP, GateKind::ANTI_CSWAP}) {
    double err = 0.0;
    std::vector<int> qs = {0, 1, 2};
    do {
      const Gate g{kind, qs};
      err = std::max(err, max_abs_diff(build_unitary(Circuit(3, decompose_cswap(g))), build_unitary(Circuit(3, {g}))));
    } while (std::next_permutation(qs.begin(), qs.end()));
    checks.add(std::string(kind == GateKind::CSWAP ? "cswap" : "anti_cswap") + "_decomposition", err, 1e-12);
  }
  {
    const Gate tof{GateKind::TOFFOLI, {0, 1, 2}};
    checks.add("toffoli_decomposition",
               max_abs_diff(build_unitary(Circuit(3, decompose_toffoli(tof))), build_unitary(Circuit(3, {tof}))),
               1e-12);
  }

  {
    const double q = 1.0 / 3.0;
    const auto worked = conditional_thermal_output(population_state(q), population_state(q));
    const double err = std::max(std::abs(worked.plus_prob - 2.0 / 3.0),
                                std::abs(worked.plus_state->population(1) - 5.0 / 18.0));
    checks.add("worked_point", err, 1e-12);
  }

  double equivalence = 0.0, consistency = 0.0;
  const std::vector<std::size_t> dims = {2, 2, 2, 2};
  const std::vector<std::size_t> keep = {0, 1};
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto rng = SplitMix64::substream(seed, i);
    const double beta = -2.0 + 6.0 * rng.uniform();
    const auto t = thermal_state(beta);
    const auto rho = random_qubit_state(rng);
    const auto final_state = evolve_density(switch_circuit_full(), kron(kron(plus_state(), rho), kron(t, t)));
    const auto dense = measure_control_pm(DensityMatrix(partial_trace(final_state.matrix(), dims, keep)));
    const auto closed = conditional_thermal_output(t, rho);
    equivalence = std::max({equivalence, std::abs(dense.plus_prob - closed.plus_prob),
                            std::abs(dense.minus_prob - closed.minus_prob),
                            max_abs_diff(dense.plus_state->matrix(), closed.plus_state->matrix()),
                            max_abs_diff(dense.minus_state->matrix(), closed.minus_state->matrix())});
    const auto sum = closed.plus_state->matrix() * Complex(closed.plus_prob) +
                     closed.minus_state->matrix() * Complex(closed.minus_prob);
    consistency = std::max(consistency, max_abs_diff(sum, t.matrix()));
  }
  checks.add("closed_form_equivalence", equivalence, 1e-10);
  checks.add("unconditional_consistency", consistency, 1e-12);

  double cptp = 0.0;
  {
    auto rng = SplitMix64::substream(seed, samples);
    for (int i = 0; i < 20; ++i) {
      const auto a = random_unitary_mixture(rng);
      const auto b = thermalizing_channel(population_state(rng.uniform()));
      cptp = std::max(cptp, switch_compose(a, b).composite.completeness_error());
      const std::vector<KrausChannel> three = {a, b, random_unitary_mixture(rng)};
      const std::vector<std::vector<std::size_t>> orders = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      cptp = std::max(cptp, switch_compose_n(three, orders).composite.completeness_error());
    }
  }
  checks.add("switch_cptp", cptp, 1e-9);

  if (opts.circuit) {
    const auto c = read_circuit_file(*opts.circuit);
    const double err = c.n_qubits() == 4 ? max_abs_diff(build_unitary(c), full) : kInf;
    checks.add("circuit_file_equivalence", err, 1e-12);
    r.add_summary("circuit_file", opts.circuit->string());
  }
  return r;
}

Report run_command(std::string_view name, const ScenarioConfig& cfg, const RunOptions& opts) {
  Report r;
  try {
    if (name == "sweep") {
      r = cmd_sweep(cfg);
    } else if (name == "trajectory") {
      r = cmd_trajectory(cfg);
    } else if (name == "histogram") {
      r = cmd_histogram(cfg);
    } else if (name == "noise-compare") {
      r = cmd_noise_compare(cfg);
    } else if (name == "cycle-mc") {
      r = cmd_cycle_mc(cfg);
    } else if (name == "verify") {
      r = cmd_verify(cfg, opts);
    } else {
      throw ConfigError("unknown command '" + std::string(name) + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  cfg.get_count("seed", 0);

  const auto unused = cfg.unused_keys();
  if (!unused.empty()) {
    std::string msg = "config keys not used by '" + std::string(name) + "':";
    for (const auto& k : unused) msg += " " + k;
    throw ConfigError(msg);
  }
  r.config.assign(cfg.resolved().begin(), cfg.resolved().end());
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"icofridge: refrigeration cycles driven by a quantum SWITCH"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, format_name = "csv", circuit_path;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "Scenario file (key = value lines)");
  app.add_option("--seed", seed, "Overrides the config seed");
  app.add_option("--out", out_path, "Output file (default stdout)");
  app.add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  const std::vector<std::pair<std::string, std::string>> help = {
      {"sweep", "Plus/minus output temperature against input temperature"},
      {"trajectory", "Temperature over consecutive plus outcomes, and the fixed point"},
      {"histogram", "Outcome counts of the 4-qubit SWITCH experiment"},
      {"noise-compare", "Branch splitting under each noise model"},
      {"cycle-mc", "Monte Carlo of refrigeration cycles with heat bookkeeping"},
      {"verify", "Built-in consistency checks"}};
  for (const auto& [name, text] : help) {
    auto* sub = app.add_subcommand(name, text);
    if (name == "verify") sub->add_option("--circuit", circuit_path, "Circuit file to compare with the SWITCH");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    ScenarioConfig cfg = config_path.empty() ? ScenarioConfig{} : ScenarioConfig::load(config_path);
    if (seed) cfg.set("seed", std::to_string(*seed));
    RunOptions opts;
    if (!circuit_path.empty()) opts.circuit = circuit_path;

    const auto report = run_command(app.get_subcommands().front()->get_name(), cfg, opts);
    const auto format = *parse_format(format_name);
    if (out_path.empty()) {
      write_report(out, report, format);
    } else {
      std::ofstream file(out_path);
      if (!file) throw ConfigError("cannot open output file " + out_path);
      write_report(file, report, format);
    }
    if (!report.ok) {
      err << "icofridge: one or more checks failed\n";
      return 1;
    }
    return 0;
  } catch (const CircuitParseError& e) {
    err << "icofridge: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    err << "icofridge: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace icofridge::cli
