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

#include "entcap/capability.hpp"
#include "entcap/errors.hpp"
#include "entcap/random.hpp"
#include "entcap/self_inverse.hpp"
#include "entcap/state_space.hpp"
#include "oracles.hpp"

using namespace entcap;

namespace {

BipartiteState local_rotate(const BipartiteState& s, const ComplexMatrix& ua, const ComplexMatrix& ub) {
  return BipartiteState::from_unnormalized(s.dA(), s.dB(), matvec(kron(ua, ub), s.amplitudes()));
}

}  // namespace

TEST_CASE("state construction validates its input") {
  CHECK_THROWS_AS(BipartiteState(2, 2, ComplexVector(3, 0.5)), DimensionError);
  CHECK_THROWS_AS(BipartiteState(2, 2, ComplexVector(4, 1.0)), DomainError);
  CHECK_NOTHROW(BipartiteState(2, 2, ComplexVector(4, 0.5)));
}

TEST_CASE("Schmidt decomposition of small examples") {
  const ComplexVector zero{1.0, 0.0};
  const ComplexVector one{0.0, 1.0};
  const SchmidtDecomposition product = schmidt(BipartiteState::product(zero, zero));
  REQUIRE(product.rank() == 1);
  CHECK(product.coefficients[0] == doctest::Approx(1.0));
  CHECK(entropy(BipartiteState::product(zero, one)) == doctest::Approx(0.0));

  const SchmidtDecomposition bell = schmidt(max_entangled(2));
  REQUIRE(bell.rank() == 2);
  CHECK(bell.coefficients[0] == doctest::Approx(0.5));
  CHECK(bell.coefficients[1] == doctest::Approx(0.5));

  // |00> + |01> + |11>: rho_A = [[2/3, 1/3], [1/3, 1/3]].
  const double s = 1.0 / std::sqrt(3.0);
  const BipartiteState psi(2, 2, {s, s, 0.0, s});
  const auto [l1, l2] = oracle::eig2(oracle::reduced_a(psi.amplitudes(), 2, 2));
  const SchmidtDecomposition sd = schmidt(psi);
  REQUIRE(sd.rank() == 2);
  CHECK(sd.coefficients[0] == doctest::Approx(l1).epsilon(1e-12));
  CHECK(sd.coefficients[1] == doctest::Approx(l2).epsilon(1e-12));
  CHECK(sd.coefficients[0] == doctest::Approx(0.8727).epsilon(1e-4));
  CHECK(entropy(psi) == doctest::Approx(oracle::binary_entropy(l1)).epsilon(1e-12));
  CHECK(entropy(psi) == doctest::Approx(0.5501).epsilon(1e-4));
}

TEST_CASE("maximally entangled states") {
  CHECK(entropy(max_entangled(2)) == doctest::Approx(1.0));
  CHECK(entropy(max_entangled(3)) == doctest::Approx(std::log2(3.0)));
  CHECK_THROWS_AS(max_entangled(1), DomainError);
}

TEST_CASE("Schmidt round trip and entropy symmetries on random states") {
  Rng rng(21);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dA = static_cast<std::size_t>(dim(rng));
    const std::size_t dB = static_cast<std::size_t>(dim(rng));
    const BipartiteState psi = random_state(dA, dB, rng);
    const SchmidtDecomposition sd = schmidt(psi);
    CHECK(fidelity(sd.reconstruct(), psi) > 1.0 - 1e-9);
    CHECK(std::abs(entropy(psi) - entropy(psi.swapped())) < 1e-10);
    const BipartiteState rotated = local_rotate(psi, random_unitary(dA, rng), random_unitary(dB, rng));
    CHECK(std::abs(entropy(psi) - entropy(rotated)) < 1e-9);
  }
}

TEST_CASE("two-term concurrence matches the spin-flip concurrence") {
  CHECK(concurrence_two_term(0.0, 0.0, std::numbers::pi / 4.0) == doctest::Approx(1.0));
  CHECK(concurrence_two_term(1.0, 0.3, 0.4) == doctest::Approx(0.0));
  for (int k = 0; k < 50; ++k) {
    const double t = -1.5 + 3.0 * k / 49.0;
    const ComplexVector psi{std::cos(t), 0.0, 0.0, -kI * std::sin(t)};
    CHECK(std::abs(concurrence_two_term(0.0, 0.0, t) - oracle::spin_flip_concurrence(psi)) < 1e-10);
    CHECK(std::abs(concurrence_two_term(0.0, 0.0, t) - std::abs(std::sin(2.0 * t))) < 1e-12);
  }
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteState psi = random_state(2, 2, rng);
    CHECK(std::abs(pure_concurrence(psi) - oracle::spin_flip_concurrence(psi.amplitudes())) < 1e-10);
  }
  CHECK_THROWS_AS(concurrence_two_term(1.1, 0.0, 0.2), DomainError);
}

TEST_CASE("optimal input") {
  const SelfInverseFactor z = pauli_z();
  const SchmidtDecomposition half = schmidt(optimal_input(z, z, 0.5));
  REQUIRE(half.rank() == 2);
  CHECK(half.coefficients[0] == doctest::Approx(0.5));
  CHECK(entropy(optimal_input(z, z, 0.5)) == doctest::Approx(1.0));

  const double x0 = oracle::stationarity_root();
  for (const auto& [a, b] : {std::pair{pauli_z(), pauli_z()}, std::pair{parity(Spin::from_twice(2)), parity(Spin::from_twice(2))},
                             std::pair{parity(Spin::from_twice(1)), boson_parity(16)}}) {
    for (double x : {0.6, 0.75, 0.9, x0}) {
      const BipartiteState psi = optimal_input(a, b, x);
      const SchmidtDecomposition sd = schmidt(psi);
      REQUIRE(sd.rank() == 2);
      CHECK(sd.coefficients[0] == doctest::Approx(x).epsilon(1e-12));
      CHECK(std::abs(rate_zero_schmidt(a, b, sd) - oracle::two_term(x)) < 1e-9);
    }
  }
  // Spin-1 parity at x = 0.7: 2 sqrt(0.21) log2(7/3).
  const SelfInverseFactor p1 = parity(Spin::from_twice(2));
  const BipartiteState s07 = optimal_input(p1, p1, 0.7);
  CHECK(rate_zero_schmidt(p1, p1, schmidt(s07)) == doctest::Approx(2.0 * std::sqrt(0.21) * std::log2(7.0 / 3.0)));
  CHECK(std::abs(rate_finite_difference(ProductHamiltonian(p1, p1).matrix(), s07, 0.0) - 1.1203411599) < 1e-6);
  CHECK_THROWS_AS(optimal_input(z, z, 1.0), DomainError);
}

TEST_CASE("spin coherent states") {
  for (int twice : {1, 2, 3, 4}) {
    const Spin j = Spin::from_twice(twice);
    const ComplexVector vac = spin_coherent(j, 0.0);
    CHECK(std::abs(vac[0] - 1.0) < 1e-14);
    CHECK(norm(vac) == doctest::Approx(1.0));
    // |eta> for real eta = theta/2 is the binomial state with p = sin^2(theta/2).
    const double r = 0.6;
    const ComplexVector coh = spin_coherent(j, r);
    const ComplexVector bin = binomial_state(twice, std::sin(r) * std::sin(r), j.dim());
    for (std::size_t n = 0; n < j.dim(); ++n) CHECK(std::abs(std::abs(coh[n]) - std::abs(bin[n])) < 1e-12);
    // Parity maps |eta> to |-eta>.
    const Complex eta = std::polar(0.8, 0.4);
    const ComplexVector flipped = matvec(parity(j).matrix(), spin_coherent(j, eta));
    const ComplexVector minus = spin_coherent(j, -eta);
    for (std::size_t n = 0; n < j.dim(); ++n) CHECK(std::abs(flipped[n] - minus[n]) < 1e-12);
  }
}

TEST_CASE("entangled coherent states") {
  const Spin j = Spin::from_twice(2);
  const BipartiteState sym = ecs(j, std::polar(0.5, 0.3), 0.5);
  const SchmidtDecomposition sd = schmidt(sym);
  REQUIRE(sd.rank() == 2);
  CHECK(rate_zero_general(ProductHamiltonian(parity(j), parity(j)).matrix(), sym) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_THROWS_AS(ecs(j, 0.0, 0.7), DomainError);

  // Orthogonal branches at |eta| = pi/4 reduce to the two-term rate, with the
  // sign set by the +i relative phase.
  const double x = 0.8;
  const BipartiteState orth = ecs(j, std::numbers::pi / 4.0, x);
  const ProductHamiltonian h1(parity(j), parity(j));
  CHECK(std::abs(coherent_branch_overlap(j, std::numbers::pi / 4.0)) < 1e-12);
  CHECK(std::abs(std::abs(rate_zero_general(h1.matrix(), orth)) - 1.6) < 1e-9);
  CHECK(std::abs(std::abs(rate_finite_difference(h1.matrix(), orth, 0.0)) - 1.6) < 1e-6);
}

TEST_CASE("binomial states") {
  const ComplexVector vac = binomial_state(4, 0.0, 6);
  CHECK(std::abs(vac[0] - 1.0) < 1e-15);
  const ComplexVector top = binomial_state(4, 1.0, 6);
  CHECK(std::abs(top[4] - 1.0) < 1e-15);
  CHECK_THROWS_AS(binomial_state(6, 0.5, 6), DimensionError);
  CHECK_THROWS_AS(binomial_state(3, 1.5, 6), DomainError);
}
