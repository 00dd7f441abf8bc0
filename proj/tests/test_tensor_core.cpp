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

#include <random>

#include "icofridge/complex_matrix.hpp"
#include "test_support.hpp"

using namespace icofridge;

TEST_CASE("kron of identities and projectors") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  CHECK(kron(ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::diagonal({0.0, 1.0})) ==
        ComplexMatrix::diagonal({0.0, 1.0, 0.0, 0.0}));

  const auto xx = kron(gates::pauli_x(), gates::pauli_x());
  CHECK(xx.rows() == 4);
  // |00> is column 0; X(x)X sends it to |11>, index 3.
  for (std::size_t r = 0; r < 4; ++r) CHECK(xx(r, 0) == Complex(r == 3 ? 1.0 : 0.0));
}

TEST_CASE("kron is associative entry for entry") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> small(-3, 3);
  auto integer_matrix = [&](std::size_t r, std::size_t c) {
    ComplexMatrix m(r, c);
    for (auto& z : m.entries()) z = Complex(small(gen), small(gen));
    return m;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = integer_matrix(2, 3), b = integer_matrix(3, 2), c = integer_matrix(2, 2);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("matmul") {
  std::mt19937_64 gen(3);
  const auto a = testing::random_matrix(gen, 3, 3);
  CHECK(matmul(ComplexMatrix::identity(3), a) == a);
  CHECK(matmul(gates::pauli_x(), gates::pauli_x()) == ComplexMatrix::identity(2));
  CHECK(max_abs_diff(matmul(gates::hadamard(), gates::hadamard()), ComplexMatrix::identity(2)) <= 1e-14);
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("dagger") {
  CHECK(dagger(ComplexMatrix::identity(3)) == ComplexMatrix::identity(3));
  CHECK(dagger(ComplexMatrix::unit(2, 0, 1)) == ComplexMatrix::unit(2, 1, 0));
  std::mt19937_64 gen(5);
  const auto a = testing::random_matrix(gen, 2, 4);
  CHECK(dagger(dagger(a)) == a);
  CHECK(dagger(a).rows() == 4);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(ComplexMatrix(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), std::invalid_argument);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), std::invalid_argument);
}

TEST_CASE("partial trace of product and entangled states") {
  std::mt19937_64 gen(7);
  const auto ra = testing::random_density(gen, 2).matrix();
  const auto rb = testing::random_density(gen, 2).matrix();
  const auto prod = kron(ra, rb);
  CHECK(max_abs_diff(partial_trace(prod, {2, 2}, {0}), ra) <= 1e-14);
  CHECK(max_abs_diff(partial_trace(prod, {2, 2}, {1}), rb) <= 1e-14);

  ComplexMatrix bell(4, 4);
  for (std::size_t i : {0u, 3u})
    for (std::size_t j : {0u, 3u}) bell(i, j) = 0.5;
  CHECK(max_abs_diff(partial_trace(bell, {2, 2}, {1}), ComplexMatrix::identity(2) * Complex(0.5)) <= 1e-15);

  // Mixed dimensions: a qutrit (x) qubit product.
  const auto r3 = testing::random_density(gen, 3).matrix();
  CHECK(max_abs_diff(partial_trace(kron(r3, rb), {3, 2}, {0}), r3) <= 1e-14);
  CHECK(max_abs_diff(partial_trace(kron(r3, rb), {3, 2}, {1}), rb) <= 1e-14);
}

TEST_CASE("partial trace matches the index-summation oracle on 4 qubits") {
  std::mt19937_64 gen(19);
  const std::vector<std::vector<std::size_t>> keeps = {{0}, {1}, {0, 2}, {1, 3}, {0, 1, 3}, {2}};
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = testing::random_hermitian(gen, 16);
    for (const auto& keep : keeps) {
      const std::vector<std::size_t> dims{2, 2, 2, 2};
      const auto got = partial_trace(rho, dims, keep);
      const auto want = testing::partial_trace_qubits_oracle(rho, 4, std::vector<int>(keep.begin(), keep.end()));
      CHECK(max_abs_diff(got, want) <= 1e-12);
      CHECK(std::abs(trace(got) - trace(rho)) <= 1e-12);
    }
  }
}

TEST_CASE("partial trace keeps original order regardless of keep order") {
  std::mt19937_64 gen(23);
  const auto rho = testing::random_hermitian(gen, 8);
  const std::vector<std::size_t> dims{2, 2, 2};
  const std::vector<std::size_t> fwd{0, 2}, rev{2, 0};
  CHECK(partial_trace(rho, dims, fwd) == partial_trace(rho, dims, rev));
}

TEST_CASE("partial trace errors") {
  const auto rho = ComplexMatrix::identity(4);
  CHECK_THROWS_AS(partial_trace(rho, {2, 3}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, std::span<const std::size_t>(), std::span<const std::size_t>()),
                  std::invalid_argument);
  const std::vector<std::size_t> dims{2, 2};
  CHECK_THROWS_AS(partial_trace(rho, dims, std::vector<std::size_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("validity checks") {
  CHECK(is_hermitian(ComplexMatrix::identity(2), 1e-12));
  CHECK_FALSE(is_hermitian(ComplexMatrix::unit(2, 0, 1), 1e-12));
  CHECK_FALSE(is_psd(ComplexMatrix::diagonal({1.0, -1e-6}), 1e-12));
  CHECK(is_psd(ComplexMatrix::diagonal({1.0, -1e-13}), 1e-12));
  CHECK(is_unitary(gates::hadamard(), 1e-12));
  CHECK(is_unitary(gates::pauli_y(), 1e-12));
  CHECK_FALSE(is_unitary(ComplexMatrix::diagonal({1.0, 0.5}), 1e-12));
  CHECK_FALSE(is_unitary(ComplexMatrix(2, 3), 1e-12));

  // H^dagger H by explicit 2x2 arithmetic: (1/2)[[1+1, 1-1], [1-1, 1+1]].
  const auto h = gates::hadamard();
  const auto hh = matmul(dagger(h), h);
  CHECK(std::abs(hh(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(hh(0, 1)) <= 1e-15);
}

TEST_CASE("property: trace is preserved by partial trace for random Hermitian input") {
  std::mt19937_64 gen(101);
  std::uniform_int_distribution<int> qubits(2, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = qubits(gen);
    const auto rho = testing::random_hermitian(gen, std::size_t{1} << n);
    std::vector<std::size_t> dims(static_cast<std::size_t>(n), 2), keep;
    for (int q = 0; q < n; ++q)
      if (gen() & 1u) keep.push_back(static_cast<std::size_t>(q));
    if (keep.empty()) keep.push_back(0);
    CHECK(std::abs(trace(partial_trace(rho, dims, keep)) - trace(rho)) <= 1e-12);
  }
}
