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

#ifndef ENTCAP_CAPABILITY_HPP
#define ENTCAP_CAPABILITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "entcap/numerics.hpp"
#include "entcap/self_inverse.hpp"
#include "entcap/state_space.hpp"

namespace entcap {

enum class RateMethod { AnalyticSchmidt, Commutator, FiniteDifference };

std::string_view to_string(RateMethod method);

/// One entanglement-rate evaluation. Rates are in bits per unit time
/// (hbar = 1, dimensionless H).
struct RateReport {
  double t = 0.0;
  double entropy = 0.0;  // bits, at time t
  double gamma = 0.0;
  RateMethod method = RateMethod::Commutator;
};

struct CapabilityResult {
  double beta = 0.0;
  double x0 = 0.0;
  std::size_t evaluations = 0;
  std::optional<BipartiteState> optimalState;
};

/// 2 sqrt(x(1-x)) log2(x/(1-x)); the rate of a two-term optimal input with
/// Schmidt weights (x, 1-x).
double two_term_rate(double x);

/// -Tr[rho_A' log2 rho_A(t)] for an arbitrary Hermitian H, with rho(t)
/// evolved by exp(-iHt) and rho_A' = -i Tr_B[H, rho(t)].
///
/// The logarithm is taken on the support of rho_A (eigenvalues >= 1e-12).
/// Throws NotHermitianError, DimensionError, or NumericalConsistencyError if
/// rho_A' leaks into the kernel block (> 1e-8) or the trace has an
/// imaginary part above 1e-9.
double rate_commutator(const ComplexMatrix& h, const BipartiteState& state, double t);

/// i Tr_A{Tr_B[H, rho(0)] log2 rho_A(0)}, evaluated from the amplitude
/// matrices of |psi> and H|psi> without forming rho_AB.
double rate_zero_general(const ComplexMatrix& h, const BipartiteState& state);

/// Rate at t = 0 for H = X_A (x) X_B from a Schmidt decomposition:
/// i sum_mn sqrt(l_m l_n) log2(l_m / l_n) (X_A)_mn (X_B)_mn.
double rate_zero_schmidt(const SelfInverseFactor& xa, const SelfInverseFactor& xb,
                         const SchmidtDecomposition& sd);

/// Central difference of entropy(exp(-iHs)|psi>) around s = t.
double rate_finite_difference(const ComplexMatrix& h, const BipartiteState& state, double t,
                              double step = 1e-5);

/// Maximizes two_term_rate over (1/2, 1); beta ~ 1.9123.
CapabilityResult capability_bound();

/// beta, x0 and the optimal input for X_A (x) X_B. Throws
/// NumericalConsistencyError if the input's Schmidt-form rate misses beta by
/// more than 1e-8.
CapabilityResult capability_self_inverse(const SelfInverseFactor& xa, const SelfInverseFactor& xb);

/// Gamma(t) on a sorted grid. Every point gets a commutator row and an
/// analytic-schmidt row; interior points also get a finite-difference row.
/// Throws DomainError on an unsorted grid.
std::vector<RateReport> rate_sweep(const ProductHamiltonian& h, const BipartiteState& state,
                                   std::span<const double> grid);

/// Largest disagreement between methods at the same t.
double max_method_deviation(std::span<const RateReport> reports);

/// Largest concurrence U(t) makes from a product input. Starts from the
/// balanced eigenvector superpositions (zero overlaps) and confirms with
/// `trials` random product inputs; every candidate's two-term concurrence is
/// checked against the concurrence of the evolved state.
double gate_capability(const SelfInverseFactor& xa, const SelfInverseFactor& xb, double t,
                       int trials, std::uint64_t seed);

/// Gamma(0) of the SU(2) entangled coherent state under the spin-j parity
/// Hamiltonian.
double ecs_initial_rate(Spin j, Complex eta, double x);

}  // namespace entcap

#endif  // ENTCAP_CAPABILITY_HPP
