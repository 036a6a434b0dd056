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

#ifndef ENTCAP_STATE_SPACE_HPP
#define ENTCAP_STATE_SPACE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "entcap/numerics.hpp"
#include "entcap/spin.hpp"

namespace entcap {

class SelfInverseFactor;

/// Normalized pure state on H_dA (x) H_dB, amplitudes in A-major order
/// (index a*dB + b).
class BipartiteState {
 public:
  /// Throws DimensionError on a length mismatch and DomainError unless the
  /// amplitudes have unit norm within 1e-12.
  BipartiteState(std::size_t dA, std::size_t dB, ComplexVector amplitudes);

  /// Rescales `amplitudes` to unit norm first.
  static BipartiteState from_unnormalized(std::size_t dA, std::size_t dB,
                                          ComplexVector amplitudes);
  static BipartiteState product(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t dA() const noexcept { return dA_; }
  std::size_t dB() const noexcept { return dB_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  /// The dA x dB matrix Psi with Psi(a, b) = amplitude(a*dB + b).
  ComplexMatrix amplitude_matrix() const;
  ComplexMatrix density() const;
  ComplexMatrix reduced_density(Subsystem keep) const;

  /// Same state with the roles of A and B exchanged.
  BipartiteState swapped() const;

  /// Global phase chosen so the first nonzero amplitude is real and
  /// non-negative.
  BipartiteState with_canonical_phase() const;

 private:
  std::size_t dA_;
  std::size_t dB_;
  ComplexVector amplitudes_;
};

/// |<u|v>| for two states on the same split.
double fidelity(const BipartiteState& u, const BipartiteState& v);

/// Schmidt coefficients below this are dropped.
inline constexpr double kSchmidtThreshold = 1e-12;

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // lambda_n, descending, sum to 1
  ComplexMatrix vectorsA;            // dA x r, orthonormal columns
  ComplexMatrix vectorsB;            // dB x r, orthonormal columns

  std::size_t rank() const noexcept { return coefficients.size(); }
  /// sum_n sqrt(lambda_n) |psi_n> (x) |phi_n>
  BipartiteState reconstruct() const;
};

SchmidtDecomposition schmidt(const BipartiteState& state);

/// Von Neumann entropy of the reduced state, in bits.
double entropy(const BipartiteState& state);

/// sqrt(2 (1 - Tr rho_A^2)); equals 2 sqrt(lambda_1 lambda_2) for Schmidt
/// rank <= 2.
double pure_concurrence(const BipartiteState& state);

/// Concurrence of cos t |gamma, delta> - i sin t |gamma-bar, delta-bar>:
/// |sin 2t| * sqrt((1 - |overlapA|^2)(1 - |overlapB|^2)).
/// Throws DomainError if either overlap has modulus above 1 (+1e-12).
double concurrence_two_term(Complex overlapA, Complex overlapB, double t);

/// Product input |gamma> (x) |delta> with its images under the factors.
struct PseudoQubitPair {
  ComplexVector gamma;
  ComplexVector gammaBar;
  ComplexVector delta;
  ComplexVector deltaBar;
  Complex overlapA;  // <gamma|gamma-bar>
  Complex overlapB;  // <delta|delta-bar>
};

PseudoQubitPair make_pseudo_qubit_pair(const SelfInverseFactor& xa, const SelfInverseFactor& xb,
                                       std::span<const Complex> gamma,
                                       std::span<const Complex> delta);

/// Two-term optimal input built from one +1 and one -1 eigenvector of each
/// factor (the lowest-index ones when eigenspaces are degenerate):
///
///   sqrt(x)/2 (|+>+|->)(|+>+|->) - i sqrt(1-x)/2 (|+>-|->)(|+>-|->)
///
/// Its Schmidt weights are (x, 1-x) and, for x > 1/2, its entanglement grows
/// under exp(-iHt) at rate two_term_rate(x). The opposite relative phase
/// gives the time-reversed state, whose entanglement falls at that rate.
/// Throws DomainError unless 0 < x < 1.
BipartiteState optimal_input(const SelfInverseFactor& xa, const SelfInverseFactor& xb, double x);

/// exp(eta J+ - conj(eta) J-) |0>_j.
ComplexVector spin_coherent(Spin j, Complex eta);

/// <eta|-eta> for the spin coherent state of spin j.
Complex coherent_branch_overlap(Spin j, Complex eta);

/// sqrt(x) |a>|b> + i sqrt(1-x) |aBar>|bBar>, renormalized. The branches
/// need not be orthogonal. Throws DomainError if the result vanishes or x is
/// outside (0, 1).
BipartiteState entangled_superposition(std::span<const Complex> a, std::span<const Complex> b,
                                       std::span<const Complex> aBar,
                                       std::span<const Complex> bBar, double x);

/// SU(2) entangled coherent state sqrt(x)|eta,eta> + i sqrt(1-x)|-eta,-eta>,
/// renormalized. This is exp(+iH t)|eta,eta> for x = cos^2 t, so under
/// exp(-iHt) its entanglement initially decreases. Throws DomainError when
/// |eta> and |-eta> are parallel.
BipartiteState ecs(Spin j, Complex eta, double x);

/// Binomial state on M+1 Fock levels, embedded in H_D.
/// Throws DimensionError if M >= D, DomainError unless 0 <= p <= 1.
ComplexVector binomial_state(int m, double p, std::size_t d);

/// sum_n |n>|n> / sqrt(d). Throws DomainError if d < 2.
BipartiteState max_entangled(std::size_t d);

}  // namespace entcap

#endif  // ENTCAP_STATE_SPACE_HPP
