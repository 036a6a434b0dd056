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
#include "entcap/numerics.hpp"
#include "entcap/random.hpp"
#include "oracles.hpp"

using namespace entcap;

namespace {

ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (Complex& z : m.entries()) z = {g(rng), g(rng)};
  return m;
}

}  // namespace

TEST_CASE("kron matches the naive loop and the Ising diagonal") {
  CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4)) == 0.0);
  const ComplexMatrix zz = kron(pauli_z_matrix(), pauli_z_matrix());
  const double diag[] = {1.0, -1.0, -1.0, 1.0};
  CHECK(max_abs_diff(zz, ComplexMatrix::diagonal(diag)) == 0.0);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(2, 3, rng);
    const ComplexMatrix b = random_matrix(3, 2, rng);
    const ComplexMatrix c = random_matrix(2, 2, rng);
    CHECK(max_abs_diff(kron(a, b), oracle::kron(a, b)) == 0.0);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("partial trace") {
  const ComplexVector bell{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
  const ComplexMatrix rho = outer(bell, bell);
  const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Subsystem::A), half) < 1e-15);
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Subsystem::B), half) < 1e-15);

  const double s = 1.0 / std::sqrt(3.0);
  const ComplexVector psi{s, s, 0.0, s};
  const ComplexMatrix rhoA = partial_trace(outer(psi, psi), 2, 2, Subsystem::A);
  const ComplexMatrix expected{{2.0 / 3.0, 1.0 / 3.0}, {1.0 / 3.0, 1.0 / 3.0}};
  CHECK(max_abs_diff(rhoA, expected) < 1e-15);

  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_hermitian(3, rng);
    ComplexMatrix b = random_hermitian(4, rng);
    b *= Complex{1.0 / b.trace().real()};
    CHECK(max_abs_diff(partial_trace(kron(a, b), 3, 4, Subsystem::A), a) < 1e-12);
    const ComplexVector v = random_unit_vector(12, rng);
    const ComplexMatrix r = outer(v, v);
    CHECK(max_abs_diff(partial_trace(r, 3, 4, Subsystem::A), oracle::reduced_a(v, 3, 4)) < 1e-14);
    CHECK(std::abs(partial_trace(r, 3, 4, Subsystem::A).trace() - r.trace()) < 1e-12);
  }
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(6), 2, 2, Subsystem::A), DimensionError);
}

TEST_CASE("eigh") {
  const EigenDecomposition z = eigh(pauli_z_matrix());
  CHECK(z.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(z.eigenvalues[1] == doctest::Approx(1.0));

  const double parity[] = {1.0, -1.0, 1.0};
  const EigenDecomposition p = eigh(ComplexMatrix::diagonal(parity));
  CHECK(p.eigenvalues == std::vector<double>{-1.0, 1.0, 1.0});

  CHECK_THROWS_AS(eigh(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), NotHermitianError);

  Rng rng(13);
  std::uniform_int_distribution<int> dim(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const ComplexMatrix h = random_hermitian(n, rng);
    const EigenDecomposition e = eigh(h);
    const ComplexMatrix& v = e.eigenvectors;
    CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)) < 1e-10);
    CHECK(max_abs_diff(v * ComplexMatrix::diagonal(e.eigenvalues) * v.adjoint(), h) < 1e-9);
    CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
  }
}

TEST_CASE("svd") {
  const double d[] = {3.0, 2.0};
  const SingularValueDecomposition s = svd(ComplexMatrix::diagonal(d));
  CHECK(s.singular[0] == doctest::Approx(3.0));
  CHECK(s.singular[1] == doctest::Approx(2.0));
  for (double x : svd(ComplexMatrix(3, 2)).singular) CHECK(x == 0.0);

  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = random_matrix(3 + trial % 2, 4 - trial % 3, rng);
    const SingularValueDecomposition a = svd(m);
    const ComplexMatrix um = random_unitary(m.rows(), rng);
    const ComplexMatrix vm = random_unitary(m.cols(), rng);
    const SingularValueDecomposition b = svd(um * m * vm);
    REQUIRE(a.singular.size() == b.singular.size());
    for (std::size_t k = 0; k < a.singular.size(); ++k) CHECK(std::abs(a.singular[k] - b.singular[k]) < 1e-9);
    ComplexMatrix sigma(a.u.cols(), a.vh.rows());
    for (std::size_t k = 0; k < a.singular.size(); ++k) sigma(k, k) = a.singular[k];
    CHECK(max_abs_diff(a.u * sigma * a.vh, m) < 1e-10);
  }
}

TEST_CASE("commutator") {
  CHECK(frobenius_norm(commutator(pauli_z_matrix(), pauli_z_matrix())) == 0.0);
  CHECK(max_abs_diff(commutator(pauli_z_matrix(), pauli_x_matrix()), 2.0 * kI * pauli_y_matrix()) < 1e-15);
  CHECK_THROWS_AS(commutator(ComplexMatrix::identity(2), ComplexMatrix::identity(3)), DimensionError);
}

TEST_CASE("expm_hermitian agrees with a Taylor-series exponential") {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(4, rng);
    CHECK(max_abs_diff(expm_hermitian(h, 0.7), oracle::expm(h, 0.7)) < 1e-11);
  }
}

TEST_CASE("golden_max") {
  const ScalarMaxResult quad = golden_max([](double x) { return -(x - 0.5) * (x - 0.5); }, 0.0, 1.0, 1e-10);
  CHECK(quad.argmax == doctest::Approx(0.5).epsilon(1e-8));

  const ScalarMaxResult f = golden_max(oracle::two_term, 0.5, 1.0 - 1e-9, 1e-10);
  CHECK(std::abs(f.maximum - 1.9123) < 2e-4);
  CHECK(std::abs(f.argmax - oracle::stationarity_root()) < 5e-4);
  CHECK(std::abs(f.argmax - 0.9168) < 5e-4);

  CHECK_THROWS_AS(golden_max(oracle::two_term, 0.5, 0.9, 0.0), DomainError);
  CHECK_THROWS_AS(golden_max(oracle::two_term, 0.9, 0.5, 1e-6), DomainError);
}

TEST_CASE("central_diff") {
  CHECK(std::abs(central_diff([](double t) { return t * t; }, 1.0, 1e-4) - 2.0) < 1e-8);
  CHECK(std::abs(central_diff([](double t) { return std::sin(t); }, 0.0, 1e-4) - 1.0) < 1e-8);
  auto e = [](double t) {
    const double c = std::cos(t) * std::cos(t);
    return oracle::binary_entropy(c);
  };
  CHECK(std::abs(central_diff(e, 0.2, 1e-5) - std::sin(0.4) * std::log2(1.0 / std::pow(std::tan(0.2), 2))) < 1e-5);
}
