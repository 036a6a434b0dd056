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

#include "entcap/self_inverse.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "entcap/errors.hpp"

namespace entcap {

SelfInverseFactor::SelfInverseFactor(ComplexMatrix matrix, ComplexMatrix plus, ComplexMatrix minus)
    : matrix_(std::move(matrix)), plus_(std::move(plus)), minus_(std::move(minus)) {}

SelfInverseFactor make_factor(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() == 0) {
    throw DimensionError("make_factor: factor must be a non-empty square matrix");
  }
  if (!is_hermitian(m)) throw NotHermitianError("make_factor: factor is not Hermitian within 1e-10");
  const std::size_t d = m.rows();
  const ComplexMatrix x = 0.5 * (m + m.adjoint());
  const double square_error = max_abs_diff(x * x, ComplexMatrix::identity(d));
  if (square_error > 1e-10) {
    throw NotInvolutionError("make_factor: X^2 differs from I by " + std::to_string(square_error));
  }

  const EigenDecomposition ed = eigh(x);
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  for (std::size_t k = 0; k < d; ++k) {
    const double lambda = ed.eigenvalues[k];
    if (std::abs(lambda - 1.0) <= 1e-8) {
      plus.push_back(k);
    } else if (std::abs(lambda + 1.0) <= 1e-8) {
      minus.push_back(k);
    } else {
      throw NotInvolutionError("make_factor: eigenvalue " + std::to_string(lambda) +
                               " is not within 1e-8 of +-1");
    }
  }
  if (plus.empty() || minus.empty()) {
    throw TrivialFactorError(plus.empty() ? "make_factor: factor is -I" : "make_factor: factor is I");
  }

  auto gather = [&](const std::vector<std::size_t>& cols) {
    ComplexMatrix basis(d, cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) basis.set_column(i, ed.eigenvectors.column_vector(cols[i]));
    return basis;
  };
  return SelfInverseFactor(x, gather(plus), gather(minus));
}

SelfInverseFactor pauli_z() { return make_factor(pauli_z_matrix()); }

SelfInverseFactor parity(Spin j) {
  std::vector<double> signs(j.dim());
  for (std::size_t n = 0; n < signs.size(); ++n) signs[n] = n % 2 == 0 ? 1.0 : -1.0;
  return make_factor(ComplexMatrix::diagonal(signs));
}

SelfInverseFactor boson_parity(std::size_t d) {
  if (d < 2) throw DomainError("boson_parity: truncation must keep at least 2 Fock levels");
  std::vector<double> signs(d);
  for (std::size_t n = 0; n < d; ++n) signs[n] = n % 2 == 0 ? 1.0 : -1.0;
  return make_factor(ComplexMatrix::diagonal(signs));
}

SelfInverseFactor with_leading_ancilla(const SelfInverseFactor& x, std::size_t ancilla) {
  if (ancilla == 0) throw DimensionError("ancilla dimension must be positive");
  return make_factor(kron(ComplexMatrix::identity(ancilla), x.matrix()));
}

SelfInverseFactor with_trailing_ancilla(const SelfInverseFactor& x, std::size_t ancilla) {
  if (ancilla == 0) throw DimensionError("ancilla dimension must be positive");
  return make_factor(kron(x.matrix(), ComplexMatrix::identity(ancilla)));
}

ProductHamiltonian::ProductHamiltonian(SelfInverseFactor a, SelfInverseFactor b)
    : a_(std::move(a)), b_(std::move(b)), matrix_(kron(a_.matrix(), b_.matrix())) {}

ComplexMatrix ProductHamiltonian::extended_matrix(std::size_t ancillaA, std::size_t ancillaB) const {
  if (ancillaA == 0 || ancillaB == 0) throw DimensionError("ancilla dimension must be positive");
  return kron(kron(ComplexMatrix::identity(ancillaA), matrix_), ComplexMatrix::identity(ancillaB));
}

ComplexMatrix evolution(const ProductHamiltonian& h, double t) {
  const std::size_t n = h.matrix().rows();
  return std::cos(t) * ComplexMatrix::identity(n) + (-kI * std::sin(t)) * h.matrix();
}

BipartiteState apply_with_ancillas(const ComplexMatrix& v, const BipartiteState& state,
                                   std::size_t ancillaA, std::size_t ancillaB) {
  if (ancillaA == 0 || ancillaB == 0 || state.dA() % ancillaA != 0 || state.dB() % ancillaB != 0 ||
      v.rows() != (state.dA() / ancillaA) * (state.dB() / ancillaB) || !v.is_square()) {
    throw DimensionError("apply_with_ancillas: state split " + std::to_string(state.dA()) + "x" +
                         std::to_string(state.dB()) + " does not factor as (" +
                         std::to_string(ancillaA) + "*dA, dB*" + std::to_string(ancillaB) +
                         ") for a " + std::to_string(v.rows()) + "-dimensional operator");
  }
  const ComplexMatrix full =
      kron(kron(ComplexMatrix::identity(ancillaA), v), ComplexMatrix::identity(ancillaB));
  return BipartiteState::from_unnormalized(state.dA(), state.dB(), matvec(full, state.amplitudes()));
}

BipartiteState evolve_state(const ProductHamiltonian& h, const BipartiteState& state, double t,
                            std::size_t ancillaA, std::size_t ancillaB) {
  if (state.dA() != ancillaA * h.dA() || state.dB() != h.dB() * ancillaB) {
    throw DimensionError("evolve_state: state split " + std::to_string(state.dA()) + "x" +
                         std::to_string(state.dB()) + " does not match (" + std::to_string(ancillaA) +
                         "*" + std::to_string(h.dA()) + ", " + std::to_string(h.dB()) + "*" +
                         std::to_string(ancillaB) + ")");
  }
  return apply_with_ancillas(evolution(h, t), state, ancillaA, ancillaB);
}

}  // namespace entcap
