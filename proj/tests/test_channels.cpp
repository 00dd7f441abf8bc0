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

#include "icofridge/channels.hpp"
#include "test_support.hpp"

using namespace icofridge;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("thermal_state closed forms") {
  const auto half = thermal_state(0.0);
  CHECK(half.population(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.population(1) == doctest::Approx(0.5).epsilon(1e-15));

  const auto ground = thermal_state(kInf);
  CHECK(ground.population(0) == 1.0);
  CHECK(ground.population(1) == 0.0);

  const auto inverted = thermal_state(-kInf);
  CHECK(inverted.population(1) == 1.0);

  // beta*gap = ln 2: q = 1 / (1 + 2) = 1/3.
  const auto t = thermal_state(std::log(2.0));
  CHECK(std::abs(t.population(0) - 2.0 / 3.0) <= 1e-15);
  CHECK(std::abs(t.population(1) - 1.0 / 3.0) <= 1e-15);
  CHECK(std::abs(t.matrix()(0, 1)) == 0.0);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({0.6, 0.6})), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::diagonal({1.1, -0.1})), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix(2, 3)), std::invalid_argument);
  CHECK(DensityMatrix::maximally_mixed(4).num_qubits() == 2);
  CHECK_THROWS_AS(DensityMatrix::maximally_mixed(6).num_qubits(), std::logic_error);
}

TEST_CASE("thermalizing channel is constant") {
  const auto reset = thermalizing_channel(thermal_state(kInf));
  std::mt19937_64 gen(1);
  const auto any = testing::random_density(gen, 2);
  CHECK(max_abs_diff(apply_channel(reset, any).matrix(), ComplexMatrix::unit(2, 0, 0)) <= 1e-15);

  const auto flat = thermalizing_channel(thermal_state(0.0));
  const DensityMatrix plus(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
  CHECK(max_abs_diff(apply_channel(flat, plus).matrix(), ComplexMatrix::identity(2) * Complex(0.5)) <= 1e-15);

  // Completeness for diag(2/3, 1/3): sum_ij t_i |j><i|i><j| = (t_0 + t_1) I.
  const auto ch = thermalizing_channel(population_state(1.0 / 3.0));
  CHECK(ch.ops().size() == 4);
  CHECK(max_abs_diff(testing::kraus_sum_oracle(ch.ops()), ComplexMatrix::identity(2)) <= 1e-15);
  CHECK(ch.completeness_error() <= 1e-15);
}

TEST_CASE("thermalizing channel rejects non-diagonal or non-qubit states") {
  CHECK_THROWS_AS(thermalizing_channel(DensityMatrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(thermalizing_channel(DensityMatrix::maximally_mixed(4)), std::invalid_argument);
}

TEST_CASE("thermalizing channel output is input independent") {
  std::mt19937_64 gen(2);
  const auto t = thermal_state(0.7);
  const auto ch = thermalizing_channel(t);
  std::vector<DensityMatrix> outputs;
  for (int i = 0; i < 20; ++i) outputs.push_back(apply_channel(ch, testing::random_density(gen, 2)));
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    for (std::size_t j = i + 1; j < outputs.size(); ++j) {
      CHECK(max_abs_diff(outputs[i].matrix(), outputs[j].matrix()) <= 1e-12);
    }
    CHECK(max_abs_diff(outputs[i].matrix(), t.matrix()) <= 1e-12);
  }
}

TEST_CASE("apply_channel") {
  std::mt19937_64 gen(3);
  const auto rho = testing::random_density(gen, 3);
  CHECK(max_abs_diff(apply_channel(KrausChannel::identity(3), rho).matrix(), rho.matrix()) <= 1e-15);
  CHECK_THROWS_AS(apply_channel(KrausChannel::identity(2), rho), std::invalid_argument);
}

TEST_CASE("property: random CPTP channels preserve trace and Hermiticity") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const auto ch = testing::random_channel(gen, dim, 1 + trial % 4);
    CHECK(ch.completeness_error() <= 1e-9);
    const auto out = apply_channel(ch, testing::random_density(gen, dim));
    CHECK(std::abs(trace(out.matrix()) - 1.0) <= 1e-12);
    CHECK(is_hermitian(out.matrix(), 1e-12));
  }
}

TEST_CASE("KrausChannel rejects incomplete or ragged operator sets") {
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::diagonal({1.0, 0.5})}), std::invalid_argument);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::identity(2), ComplexMatrix::identity(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}), std::invalid_argument);
  CHECK_THROWS_AS(KrausChannel::unitary(ComplexMatrix::diagonal({1.0, 2.0})), std::invalid_argument);
}

TEST_CASE("effective_beta") {
  CHECK(effective_beta(population_state(0.5)) == 0.0);
  CHECK(std::abs(effective_beta(population_state(5.0 / 18.0)) - std::log(13.0 / 5.0)) <= 1e-12);
  CHECK(std::abs(effective_beta(population_state(5.0 / 18.0)) - 0.9555114450274363) <= 1e-12);
  CHECK(effective_beta(population_state(0.7)) == doctest::Approx(std::log(3.0 / 7.0)));
  CHECK(effective_beta(population_state(0.7)) < 0.0);
  CHECK(effective_beta(population_state(0.0)) == kInf);
  CHECK(effective_beta(population_state(1.0)) == -kInf);
  // Coherences are ignored.
  const DensityMatrix coherent(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
  CHECK(effective_beta(coherent) == 0.0);
}

TEST_CASE("property: effective_beta inverts thermal_state") {
  for (double beta : {-2.0, -0.5, 0.0, 0.3, 1.0, 3.0}) {
    CHECK(std::abs(effective_beta(thermal_state(beta)) - beta) <= 1e-12);
  }
}

TEST_CASE("mix") {
  const auto m = mix(0.8, population_state(0.5), population_state(0.3));
  CHECK(std::abs(m.population(1) - 0.46) <= 1e-15);
  CHECK_THROWS_AS(mix(1.5, population_state(0.5), population_state(0.3)), std::invalid_argument);
}
