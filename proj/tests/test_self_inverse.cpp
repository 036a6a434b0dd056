// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entcap/errors.hpp"
#include "entcap/random.hpp"
#include "entcap/self_inverse.hpp"
#include "oracles.hpp"

using namespace entcap;

TEST_CASE("make_factor classifies its input") {
  const SelfInverseFactor z = pauli_z();
  CHECK(z.eigenplus().cols() == 1);
  CHECK(z.eigenminus().cols() == 1);
  CHECK(std::abs(z.eigenplus()(0, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(z.eigenminus()(1, 0)) == doctest::Approx(1.0));

  const SelfInverseFactor p1 = parity(Spin::from_twice(2));
  CHECK(p1.eigenplus().cols() == 2);
  CHECK(p1.eigenminus().cols() == 1);

  CHECK_THROWS_AS(make_factor(ComplexMatrix::identity(2)), TrivialFactorError);
  CHECK_THROWS_AS(make_factor(-1.0 * ComplexMatrix::identity(3)), TrivialFactorError);
  CHECK_THROWS_AS(make_factor(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), NotHermitianError);
  CHECK_THROWS_AS(make_factor(ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}), NotInvolutionError);
  CHECK_THROWS_AS(make_factor(ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(boson_parity(1), DomainError);

  // Any U diag(+-1) U^dagger is accepted.
  Rng rng(31);
  const ComplexMatrix u = random_unitary(4, rng);
  const double signs[] = {1.0, -1.0, -1.0, 1.0};
  const SelfInverseFactor rotated = make_factor(u * ComplexMatrix::diagonal(signs) * u.adjoint());
  CHECK(rotated.eigenplus().cols() == 2);
}

TEST_CASE("every named factor is a Hermitian involution") {
  std::vector<SelfInverseFactor> factors{pauli_z(), boson_parity(2), boson_parity(7), boson_parity(16)};
  for (int twice = 1; twice <= 6; ++twice) factors.push_back(parity(Spin::from_twice(twice)));
  factors.push_back(with_leading_ancilla(pauli_z(), 2));
  factors.push_back(with_trailing_ancilla(parity(Spin::from_twice(3)), 3));
  for (const SelfInverseFactor& x : factors) {
    const ComplexMatrix& m = x.matrix();
    CHECK(max_abs_diff(m * m, ComplexMatrix::identity(x.dim())) < 1e-10);
    CHECK(max_abs_diff(m, m.adjoint()) < 1e-10);
    CHECK(x.eigenplus().cols() + x.eigenminus().cols() == x.dim());
  }
}

TEST_CASE("evolution operator") {
  const ProductHamiltonian ising(pauli_z(), pauli_z());
  CHECK(max_abs_diff(evolution(ising, 0.0), ComplexMatrix::identity(4)) < 1e-15);
  CHECK(max_abs_diff(evolution(ising, std::numbers::pi / 2.0), -kI * ising.matrix()) < 1e-15);
  CHECK(max_abs_diff(evolution(ising, 0.3), oracle::expm(ising.matrix(), 0.3)) < 1e-12);

  const ProductHamiltonian h(parity(Spin::from_twice(1)), boson_parity(5));
  CHECK(max_abs_diff(evolution(h, 1.1), oracle::expm(h.matrix(), 1.1)) < 1e-11);
  Rng rng(32);
  std::uniform_real_distribution<double> time(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double t = time(rng);
    const double s = time(rng);
    CHECK(max_abs_diff(evolution(h, t) * evolution(h, s), evolution(h, t + s)) < 1e-9);
    CHECK(max_abs_diff(evolution(h, t + 2.0 * std::numbers::pi), evolution(h, t)) < 1e-9);
  }
}

TEST_CASE("evolve_state") {
  const ProductHamiltonian ising(pauli_z(), pauli_z());
  Rng rng(33);
  const BipartiteState psi = random_state(2, 2, rng);
  const ComplexVector direct = matvec(evolution(ising, 0.4), psi.amplitudes());
  const BipartiteState evolved = evolve_state(ising, psi, 0.4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(evolved.amplitudes()[i] - direct[i]) < 1e-14);

  const ComplexVector zero{1.0, 0.0};
  const BipartiteState eigen = evolve_state(ising, BipartiteState::product(zero, zero), std::numbers::pi / 4.0);
  CHECK(entropy(eigen) < 1e-12);

  // Ancillas: I (x) U (x) I on A'A | BB' must match the explicit Kronecker product.
  const BipartiteState big = random_state(4, 6, rng);
  const ComplexMatrix full = kron(kron(ComplexMatrix::identity(2), evolution(ising, 0.9)), ComplexMatrix::identity(3));
  const ComplexVector expected = matvec(full, big.amplitudes());
  const BipartiteState ev = evolve_state(ising, big, 0.9, 2, 3);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(std::abs(ev.amplitudes()[i] - expected[i]) < 1e-13);
    norm2 += std::norm(ev.amplitudes()[i]);
  }
  CHECK(std::abs(norm2 - 1.0) < 1e-12);
  CHECK_THROWS_AS(evolve_state(ising, big, 0.9, 3, 3), DimensionError);
}
