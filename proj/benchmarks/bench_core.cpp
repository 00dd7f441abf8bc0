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

#include <benchmark/benchmark.h>

#include <cmath>

#include "icofridge/circuit.hpp"
#include "icofridge/fridge.hpp"

namespace {

using namespace icofridge;

DensityMatrix switch_input(double beta) {
  const auto t = thermal_state(beta);
  return kron(kron(plus_state(), t), kron(t, t));
}

void BM_Kron4(benchmark::State& state) {
  const auto t = thermal_state(0.7).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(kron(kron(t, t), kron(t, t)));
}
BENCHMARK(BM_Kron4);

void BM_PartialTrace(benchmark::State& state) {
  const auto rho = switch_input(0.7).matrix();
  const std::vector<std::size_t> dims = {2, 2, 2, 2};
  const std::vector<std::size_t> keep = {0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, dims, keep));
}
BENCHMARK(BM_PartialTrace);

void BM_BuildUnitary(benchmark::State& state) {
  const auto c = decompose_to_two_qubit(switch_experiment_circuit());
  for (auto _ : state) benchmark::DoNotOptimize(build_unitary(c));
}
BENCHMARK(BM_BuildUnitary);

void BM_ConditionalThermalOutput(benchmark::State& state) {
  const auto t = thermal_state(std::log(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(conditional_thermal_output(t, t));
}
BENCHMARK(BM_ConditionalThermalOutput);

void BM_EvolveNoiseless(benchmark::State& state) {
  const auto c = switch_circuit_simplified();
  const auto in = switch_input(0.7);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_density(c, in));
}
BENCHMARK(BM_EvolveNoiseless);

void BM_EvolveNoisy(benchmark::State& state) {
  const auto c = switch_experiment_circuit();
  const auto in = switch_input(0.7);
  NoiseSpec noise;
  noise.after_1q = {0.001, 0.001, 0.001};
  noise.after_2q = {0.005, 0.005, 0.005};
  noise.readout = {{0.02, 0.03}};
  for (auto _ : state) benchmark::DoNotOptimize(evolve_density(c, in, noise));
}
BENCHMARK(BM_EvolveNoisy);

void BM_SimulateShots(benchmark::State& state) {
  const auto c = switch_experiment_circuit();
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_shots(c, "0100", std::nullopt, shots, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateShots)->Arg(1000)->Arg(100000);

void BM_MixedInputRun(benchmark::State& state) {
  const auto c = switch_experiment_circuit();
  const double q = 1.0 / 3.0;
  const auto w = thermal_input_weights(q, q, q);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_input_run(c, w, std::nullopt, 100000, 1));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_MixedInputRun);

void BM_TrajectorySimpleNoise(benchmark::State& state) {
  NoiseModel m;
  m.simple = SimpleNoiseParams{0.8, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(trajectory_all_plus(0.0, 200, m));
}
BENCHMARK(BM_TrajectorySimpleNoise);

void BM_FixedPoint(benchmark::State& state) {
  NoiseModel m;
  m.simple = SimpleNoiseParams{0.8, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point_beta(m));
}
BENCHMARK(BM_FixedPoint);

void BM_RunCycles(benchmark::State& state) {
  FridgeConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(run_cycles(cfg, 10000));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_RunCycles);

}  // namespace

BENCHMARK_MAIN();
