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

#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "icofridge/fridge.hpp"
#include "test_support.hpp"

using namespace icofridge;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NoiseModel simple_noise(double p_suc, double fail_pop) {
  NoiseModel m;
  m.simple = SimpleNoiseParams{p_suc, fail_pop};
  return m;
}

NoiseModel init_noise(double p_init, double beta_fail) {
  NoiseModel m;
  m.init = InitNoiseParams{p_init, beta_fail};
  return m;
}

double excited(double beta) { return 1.0 / (1.0 + std::exp(beta)); }

}  // namespace

TEST_CASE("ico_cooling_step") {
  SUBCASE("noiseless") {
    const auto out = ico_cooling_step(std::log(2.0), NoiseModel{});
    CHECK(std::abs(out.plus_prob - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(effective_beta(*out.plus_state) - std::log(13.0 / 5.0)) <= 1e-12);
    CHECK(std::abs(effective_beta(*out.minus_state) - std::log(5.0 / 4.0)) <= 1e-12);
    CHECK(std::abs(plus_branch_beta(std::log(2.0), NoiseModel{}) - std::log(13.0 / 5.0)) <= 1e-12);
  }
  SUBCASE("simple noise has no splitting at infinite temperature") {
    const auto out = ico_cooling_step(0.0, simple_noise(0.8, 0.3));
    CHECK(std::abs(out.plus_state->population(1) - 0.46) <= 1e-12);
    CHECK(std::abs(out.minus_state->population(1) - 0.46) <= 1e-12);
    CHECK(std::abs(effective_beta(*out.plus_state) - std::log(0.54 / 0.46)) <= 1e-12);
    CHECK(std::abs(effective_beta(*out.plus_state) - 0.1603) <= 1e-4);
  }
  SUBCASE("init noise splits at infinite temperature") {
    const auto out = ico_cooling_step(0.0, init_noise(0.9, 1.0));
    const double split = effective_beta(*out.plus_state) - effective_beta(*out.minus_state);
    CHECK(split > 1e-3);
    // The effective input is a thermal mixture at q' = 0.9/2 + 0.1 q(1).
    const double q = 0.45 + 0.1 * excited(1.0);
    const auto hand = testing::switch_branches_by_hand(q);
    CHECK(std::abs(out.plus_prob - hand.plus_prob) <= 1e-12);
    CHECK(std::abs(out.plus_state->population(1) - hand.plus_excited) <= 1e-12);
  }
  SUBCASE("gate-level route with no errors matches the closed form") {
    NoiseModel gate;
    gate.gate_level = NoiseSpec{};
    for (double beta : {0.0, 0.3, std::log(2.0), 2.0}) {
      const auto a = ico_cooling_step(beta, gate);
      const auto b = ico_cooling_step(beta, NoiseModel{});
      CHECK(std::abs(a.plus_prob - b.plus_prob) <= 1e-10);
      CHECK(max_abs_diff(a.plus_state->matrix(), b.plus_state->matrix()) <= 1e-10);
      CHECK(max_abs_diff(a.minus_state->matrix(), b.minus_state->matrix()) <= 1e-10);
    }
  }
  SUBCASE("gate-level noise heats the plus branch") {
    NoiseModel gate;
    gate.gate_level = NoiseSpec{};
    gate.gate_level->after_2q = {0.01, 0.01, 0.01};
    CHECK(plus_branch_beta(1.0, gate) < plus_branch_beta(1.0, NoiseModel{}));
  }
}

TEST_CASE("NoiseModel") {
  CHECK(NoiseModel{}.is_noiseless());
  CHECK(NoiseModel{}.name() == "none");
  NoiseModel both = simple_noise(0.8, 0.3);
  both.init = InitNoiseParams{0.9, 1.0};
  CHECK(both.name() == "simple+with_init");
  both.gate_level = NoiseSpec{};
  CHECK(both.name() == "simple+with_init+gate_level");
  CHECK_THROWS_AS(simple_noise(1.5, 0.3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(simple_noise(0.5, -0.1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(init_noise(0.9, kInf).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ico_cooling_step(0.0, simple_noise(2.0, 0.3)), std::invalid_argument);
}

TEST_CASE("FridgeConfig validation") {
  FridgeConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.beta_hot = cfg.beta_cold;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("run_cycle") {
  FridgeConfig cfg;
  cfg.beta_cold = std::log(2.0);
  cfg.beta_hot = 0.0;

  SUBCASE("plus outcome") {
    const auto r = run_cycle_with_outcome(cfg.beta_cold, cfg, ControlOutcome::kPlus);
    CHECK(r.control_outcome == ControlOutcome::kPlus);
    CHECK(std::abs(r.heat_from_cold - 1.0 / 18.0) <= 1e-12);
    CHECK(r.heat_to_hot == 0.0);
    CHECK(std::abs(r.beta_work_after_switch - std::log(13.0 / 5.0)) <= 1e-12);
    CHECK(r.beta_work_end == cfg.beta_cold);
  }
  SUBCASE("minus outcome") {
    const auto r = run_cycle_with_outcome(cfg.beta_cold, cfg, ControlOutcome::kMinus);
    CHECK(std::abs(r.heat_to_hot - (-1.0 / 18.0)) <= 1e-12);
    CHECK(std::abs(r.heat_from_cold - (1.0 / 3.0 - 0.5)) <= 1e-12);
    CHECK(r.beta_work_end == cfg.beta_cold);
  }
  SUBCASE("zero temperature") {
    FridgeConfig cold;
    cold.beta_cold = kInf;
    cold.beta_hot = 1.0;
    SplitMix64 rng(7);
    for (int i = 0; i < 10; ++i) {
      const auto r = run_cycle(kInf, cold, rng);
      CHECK(r.control_outcome == ControlOutcome::kPlus);
      CHECK(r.heat_from_cold == 0.0);
      CHECK(r.heat_to_hot == 0.0);
    }
    CHECK_THROWS_AS(run_cycle_with_outcome(kInf, cold, ControlOutcome::kMinus), std::invalid_argument);
  }
  SUBCASE("sampled outcomes follow p_plus") {
    const auto records = run_cycles(cfg, 20000);
    std::uint64_t plus = 0;
    for (const auto& r : records) plus += r.control_outcome == ControlOutcome::kPlus;
    CHECK(testing::within_3sigma(plus, records.size(), 2.0 / 3.0));
    CHECK(summarize(records).n_plus == plus);
  }
  SUBCASE("deterministic for a fixed seed") {
    cfg.seed = 99;
    const auto a = run_cycles(cfg, 200);
    const auto b = run_cycles(cfg, 200);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].control_outcome == b[i].control_outcome);
  }
}

TEST_CASE("heat bookkeeping") {
  for (double cold : {0.5, 1.0, 1.5}) {
    for (double hot : {0.1 * cold, 0.0, 0.4 * cold}) {
      FridgeConfig cfg;
      cfg.beta_cold = cold;
      cfg.beta_hot = hot;
      const auto step = ico_cooling_step(cold, NoiseModel{});
      const double qc = excited(cold), qh = excited(hot);
      const double qp = step.plus_state->population(1), qm = step.minus_state->population(1);

      const auto plus = run_cycle_with_outcome(cold, cfg, ControlOutcome::kPlus);
      const auto minus = run_cycle_with_outcome(cold, cfg, ControlOutcome::kMinus);
      CHECK(std::abs(plus.heat_from_cold - (qc - qp)) <= 1e-12);
      CHECK(std::abs(minus.heat_to_hot - (qm - qh)) <= 1e-12);
      CHECK(std::abs(minus.heat_from_cold - (qc - qh)) <= 1e-12);

      // Averaged over outcomes the cold-bath exchange reduces to p_minus (q_minus - q_hot).
      const double expected = step.plus_prob * (qc - qp) + step.minus_prob * (qc - qh);
      CHECK(std::abs(expected_heat_from_cold(cfg) - expected) <= 1e-12);
      CHECK(std::abs(expected_heat_from_cold(cfg) - step.minus_prob * (qm - qh)) <= 1e-12);
      CHECK(std::abs(expected_heat_to_hot(cfg) - step.minus_prob * (qm - qh)) <= 1e-12);
    }
  }
}

TEST_CASE("refrigeration when the hot bath is colder than the minus branch") {
  FridgeConfig cfg;
  cfg.beta_cold = 1.0;
  cfg.beta_hot = 0.5;
  CHECK(expected_heat_from_cold(cfg) > 0.0);
  const auto s = summarize(run_cycles(cfg, 20000));
  CHECK(s.n_cycles == 20000);
  CHECK(s.mean_heat_from_cold > 0.0);
  CHECK(std::abs(s.mean_heat_from_cold - expected_heat_from_cold(cfg)) <= 3.0 * s.stderr_heat_from_cold);
  CHECK(std::abs(s.mean_heat_to_hot - expected_heat_to_hot(cfg)) <= 3.0 * s.stderr_heat_to_hot);
}

TEST_CASE("property: unconditional consistency") {
  for (double beta : {0.0, 0.1, 0.5, std::log(2.0), 1.0, 2.0, 4.0, kInf}) {
    const auto out = ico_cooling_step(beta, NoiseModel{});
    ComplexMatrix sum = out.plus_state->matrix() * Complex(out.plus_prob);
    if (out.minus_state) sum += out.minus_state->matrix() * Complex(out.minus_prob);
    CHECK(max_abs_diff(sum, thermal_state(beta).matrix()) <= 1e-12);
  }
}

TEST_CASE("property: monotone cooling map") {
  for (int i = 1; i <= 40; ++i) {
    const double beta = 0.1 * i;
    const auto out = ico_cooling_step(beta, NoiseModel{});
    CHECK(effective_beta(*out.plus_state) > beta);
    CHECK(effective_beta(*out.minus_state) < beta);
  }
  const auto zero = ico_cooling_step(0.0, NoiseModel{});
  CHECK(effective_beta(*zero.plus_state) == 0.0);
  CHECK(effective_beta(*zero.minus_state) == 0.0);
  CHECK(plus_branch_beta(kInf, NoiseModel{}) == kInf);
}

TEST_CASE("property: simple noise never splits at infinite temperature") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto out = ico_cooling_step(0.0, simple_noise(u(gen), u(gen)));
    REQUIRE(out.minus_state);
    CHECK(std::abs(effective_beta(*out.plus_state) - effective_beta(*out.minus_state)) <= 1e-9);
  }
}

TEST_CASE("property: init noise splits at infinite temperature") {
  for (double p : {0.5, 0.9, 0.99}) {
    for (double fail : {-1.0, 0.5, 2.0}) {
      const auto out = ico_cooling_step(0.0, init_noise(p, fail));
      CHECK(effective_beta(*out.plus_state) != effective_beta(*out.minus_state));
    }
  }
}

TEST_CASE("trajectory_all_plus") {
  SUBCASE("noiseless from ln 2") {
    const auto t = trajectory_all_plus(std::log(2.0), 6, NoiseModel{});
    REQUIRE(t.size() == 7);
    CHECK(std::abs(t[0] - 0.6931471805599453) <= 1e-15);
    CHECK(std::abs(t[1] - 0.9555114450274363) <= 1e-12);
    for (std::size_t k = 1; k < t.size(); ++k) CHECK(t[k] > t[k - 1]);
  }
  SUBCASE("noiseless from zero stays at zero") {
    for (double b : trajectory_all_plus(0.0, 10, NoiseModel{})) CHECK(b == 0.0);
  }
  SUBCASE("zero steps") { CHECK(trajectory_all_plus(0.4, 0, NoiseModel{}).size() == 1); }
  SUBCASE("negative steps") { CHECK_THROWS_AS(trajectory_all_plus(0.4, -1, NoiseModel{}), std::invalid_argument); }
  SUBCASE("simple noise converges to the fixed point") {
    const auto noise = simple_noise(0.8, 0.3);
    FixedPointOptions tight;
    tight.tolerance = 1e-14;
    const auto fp = fixed_point_beta(noise, tight);
    REQUIRE(fp.found);
    for (double start : {0.0, 1.0, 5.0}) {
      const auto t = trajectory_all_plus(start, 200, noise);
      CHECK(std::abs(t.back() - fp.beta) <= 1e-6);
      for (std::size_t k = 2; k < t.size(); ++k) {
        CHECK(std::abs(t[k] - fp.beta) <= std::abs(t[k - 1] - fp.beta) + 1e-15);
      }
    }
  }
}

TEST_CASE("fixed_point_beta") {
  SUBCASE("noiseless cooling has no finite asymptote") {
    const auto fp = fixed_point_beta(NoiseModel{});
    CHECK_FALSE(fp.found);
  }
  SUBCASE("simple noise") {
    const auto noise = simple_noise(0.8, 0.3);
    const auto fp = fixed_point_beta(noise);
    REQUIRE(fp.found);
    CHECK(std::abs(fp.beta - 2.0405276712946) <= 1e-9);
    CHECK(std::abs(plus_branch_beta(fp.beta, noise) - fp.beta) <= 1e-8);
    CHECK(fp.residual <= 1e-8);
  }
  SUBCASE("noise tuned to an asymptote near 0.3") {
    const auto fp = fixed_point_beta(simple_noise(0.45, 0.45));
    REQUIRE(fp.found);
    CHECK(std::abs(fp.beta - 0.3) <= 0.01);
  }
  SUBCASE("custom bracket without a crossing") {
    FixedPointOptions opts;
    opts.bracket_lo = 2.5;
    opts.bracket_hi = 4.0;
    CHECK_FALSE(fixed_point_beta(simple_noise(0.8, 0.3), opts).found);
  }
}

TEST_CASE("cycles_to_target") {
  SUBCASE("target at or below start") {
    const auto e = cycles_to_target(1.0, 1.0, NoiseModel{});
    CHECK(e.reachable);
    CHECK(e.n_ideal == 0);
    CHECK(e.expected_cycles_exact == 1.0);
    CHECK(e.expected_cycles_approx == 1.0);
  }
  SUBCASE("one step from ln 2") {
    const auto e = cycles_to_target(std::log(2.0), 0.95, NoiseModel{});
    CHECK(e.reachable);
    CHECK(e.n_ideal == 1);
    CHECK(std::abs(e.expected_cycles_exact - 1.5) <= 1e-12);
    CHECK(e.expected_cycles_approx == 2.0);
  }
  SUBCASE("three steps") {
    const auto t = trajectory_all_plus(0.5, 3, NoiseModel{});
    const auto e = cycles_to_target(0.5, 0.5 * (t[2] + t[3]), NoiseModel{});
    CHECK(e.n_ideal == 3);
    CHECK(e.expected_cycles_approx == 8.0);
    double exact = 1.0;
    for (int k = 0; k < 3; ++k) exact /= ico_cooling_step(t[static_cast<std::size_t>(k)], NoiseModel{}).plus_prob;
    CHECK(std::abs(e.expected_cycles_exact - exact) <= 1e-12);
  }
  SUBCASE("beyond the fixed point is unreachable") {
    const auto e = cycles_to_target(0.5, 3.0, simple_noise(0.8, 0.3));
    CHECK_FALSE(e.reachable);
  }
  SUBCASE("no cooling from infinite temperature") {
    CHECK_FALSE(cycles_to_target(0.0, 1.0, NoiseModel{}).reachable);
  }
}

TEST_CASE("conditional_marginals") {
  SUBCASE("work qubit matches the closed form") {
    const auto m = conditional_marginals(std::log(2.0));
    const auto closed = ico_cooling_step(std::log(2.0), NoiseModel{});
    REQUIRE(m.plus.qubits.size() == 3);
    CHECK(std::abs(m.plus.prob - 2.0 / 3.0) <= 1e-10);
    CHECK(max_abs_diff(m.plus.qubits[0].matrix(), closed.plus_state->matrix()) <= 1e-10);
    CHECK(max_abs_diff(m.minus.qubits[0].matrix(), closed.minus_state->matrix()) <= 1e-10);
    CHECK(std::abs(m.plus.beta[0] - std::log(13.0 / 5.0)) <= 1e-10);
  }
  SUBCASE("full and simplified circuits agree") {
    const auto a = conditional_marginals(0.7, std::nullopt, switch_circuit_full());
    const auto b = conditional_marginals(0.7);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(a.plus.beta[k] - b.plus.beta[k]) <= 1e-10);
  }
  SUBCASE("ground-state input stays in the ground state") {
    const auto m = conditional_marginals(kInf);
    CHECK(m.plus.prob == doctest::Approx(1.0));
    for (const auto& q : m.plus.qubits) CHECK(q.population(0) == doctest::Approx(1.0));
    for (double b : m.plus.beta) CHECK(b == kInf);
  }
  SUBCASE("plus outcome cools the reservoirs") {
    for (int i = 1; i <= 30; ++i) {
      const double beta = 0.1 * i;
      const auto m = conditional_marginals(beta);
      CHECK(m.plus.beta[1] > beta);
      CHECK(m.plus.beta[2] > beta);
    }
  }
  SUBCASE("marginals of a noisy run are valid states") {
    NoiseSpec noise;
    noise.after_2q = {0.01, 0.0, 0.01};
    noise.readout = {{0.02, 0.03}};
    const auto m = conditional_marginals(1.0, noise);
    CHECK(std::abs(m.plus.prob + m.minus.prob - 1.0) <= 1e-12);
    for (const auto& q : m.plus.qubits) CHECK(std::abs(trace(q.matrix()) - 1.0) <= 1e-12);
  }
}
