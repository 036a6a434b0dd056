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

#ifndef ENTCAP_SELF_INVERSE_HPP
#define ENTCAP_SELF_INVERSE_HPP

#include <cstddef>

#include "entcap/numerics.hpp"
#include "entcap/spin.hpp"
#include "entcap/state_space.hpp"

namespace entcap {

/// Hermitian involution X (X^2 = I, X != +-I) together with orthonormal
/// bases of its +1 and -1 eigenspaces. Only make_factor and the named
/// constructors produce one.
class SelfInverseFactor {
 public:
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  /// dim x n_plus, columns span the +1 eigenspace
  const ComplexMatrix& eigenplus() const noexcept { return plus_; }
  /// dim x n_minus, columns span the -1 eigenspace
  const ComplexMatrix& eigenminus() const noexcept { return minus_; }

 private:
  friend SelfInverseFactor make_factor(const ComplexMatrix& m);
  SelfInverseFactor(ComplexMatrix matrix, ComplexMatrix plus, ComplexMatrix minus);

  ComplexMatrix matrix_;
  ComplexMatrix plus_;
  ComplexMatrix minus_;
};

/// Validates `m` as a nontrivial Hermitian involution.
///
/// Eigenvalues must lie within 1e-8 of +-1 and are snapped exactly when the
/// eigenspaces are split. Throws NotHermitianError, NotInvolutionError or
/// TrivialFactorError, in that order of checking.
SelfInverseFactor make_factor(const ComplexMatrix& m);

SelfInverseFactor pauli_z();
/// (-1)^N on the spin-j multiplet, N = J_z + j.
SelfInverseFactor parity(Spin j);
/// (-1)^{a^dagger a} truncated to Fock levels 0 .. d-1. Throws DomainError if d < 2.
SelfInverseFactor boson_parity(std::size_t d);

/// I_ancilla (x) X, i.e. an A-side factor seen from A'A.
SelfInverseFactor with_leading_ancilla(const SelfInverseFactor& x, std::size_t ancilla);
/// X (x) I_ancilla, i.e. a B-side factor seen from BB'.
SelfInverseFactor with_trailing_ancilla(const SelfInverseFactor& x, std::size_t ancilla);

/// H = X_A (x) X_B.
class ProductHamiltonian {
 public:
  ProductHamiltonian(SelfInverseFactor a, SelfInverseFactor b);

  const SelfInverseFactor& factorA() const noexcept { return a_; }
  const SelfInverseFactor& factorB() const noexcept { return b_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dA() const noexcept { return a_.dim(); }
  std::size_t dB() const noexcept { return b_.dim(); }

  /// I_{A'} (x) H (x) I_{B'} on the (A'A | BB') split.
  ComplexMatrix extended_matrix(std::size_t ancillaA, std::size_t ancillaB) const;

 private:
  SelfInverseFactor a_;
  SelfInverseFactor b_;
  ComplexMatrix matrix_;
};

/// U(t) = cos t I - i sin t X_A (x) X_B.
ComplexMatrix evolution(const ProductHamiltonian& h, double t);

/// Applies I_{A'} (x) U(t) (x) I_{B'} to a state on (A'A | BB').
/// Throws DimensionError unless state.dA() == ancillaA * h.dA() and
/// state.dB() == h.dB() * ancillaB.
BipartiteState evolve_state(const ProductHamiltonian& h, const BipartiteState& state, double t,
                            std::size_t ancillaA = 1, std::size_t ancillaB = 1);

/// Applies I_{A'} (x) V (x) I_{B'} for an arbitrary operator V on dA x dB,
/// where dA = state.dA() / ancillaA and dB = state.dB() / ancillaB.
/// The result is renormalized.
BipartiteState apply_with_ancillas(const ComplexMatrix& v, const BipartiteState& state,
                                   std::size_t ancillaA, std::size_t ancillaB);

}  // namespace entcap

#endif  // ENTCAP_SELF_INVERSE_HPP
