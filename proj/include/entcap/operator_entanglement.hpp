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

#ifndef ENTCAP_OPERATOR_ENTANGLEMENT_HPP
#define ENTCAP_OPERATOR_ENTANGLEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "entcap/numerics.hpp"
#include "entcap/self_inverse.hpp"

namespace entcap {

/// V = sum_n s_n A_n (x) B_n with {A_n}, {B_n} orthonormal under Tr(X^dagger Y).
struct OperatorSchmidt {
  std::vector<double> coefficients;  // descending, > 1e-9 * s_1
  std::vector<ComplexMatrix> factorsA;
  std::vector<ComplexMatrix> factorsB;

  std::size_t rank() const noexcept { return coefficients.size(); }
  ComplexMatrix reconstruct() const;
};

/// M[(a*dA + a'), (b*dB + b')] = V[(a*dB + b), (a'*dB + b')].
ComplexMatrix reshuffle(const ComplexMatrix& v, std::size_t dA, std::size_t dB);

/// Throws DimensionError unless V is (dA*dB)-square.
OperatorSchmidt op_schmidt(const ComplexMatrix& v, std::size_t dA, std::size_t dB);

/// p_l = s_l^2 / (dA dB) for a unitary V. Throws NotUnitaryError when
/// V^dagger V differs from I by more than 1e-8.
std::vector<double> op_weights(const ComplexMatrix& v, std::size_t dA, std::size_t dB);

/// Shannon entropy (bits) of op_weights.
double op_entanglement(const ComplexMatrix& v, std::size_t dA, std::size_t dB);

/// 2 sqrt(p_1 p_2); throws RankError if the operator Schmidt rank exceeds 2.
double op_concurrence(const ComplexMatrix& v, std::size_t dA, std::size_t dB);

/// -cos^2 t log2 cos^2 t - sin^2 t log2 sin^2 t
double u1_entanglement_analytic(double t);
/// sin 2t log2(cot^2 t), with the limit 0 at multiples of pi/2.
double u1_rate_analytic(double t);

/// d/dt of op_entanglement(U(t)) by central difference, step 1e-6.
double op_rate(const ProductHamiltonian& h, double t);
/// Same for exp(-iHt) with a general Hermitian H on dA x dB.
double op_rate_general(const ComplexMatrix& h, std::size_t dA, std::size_t dB, double t);

struct OperatorRateSample {
  double t = 0.0;
  double entanglement = 0.0;  // bits
  double rate = 0.0;          // bits per unit time
};

struct OperatorRateCurve {
  std::vector<OperatorRateSample> samples;  // t in [1e-3, pi/2 - 1e-3], step 1e-3
  double rMax = 0.0;
  double tStar = 0.0;
};

/// Samples R(t) and refines the maximum over (0, pi/4] with golden_max.
OperatorRateCurve op_rate_max(const ProductHamiltonian& h);

struct Correspondence {
  double eOperator = 0.0;
  double eState = 0.0;
};

/// op_entanglement(V) next to the entropy of V|Phi>_{A'A}|Phi>_{BB'} across
/// the A'A | BB' cut.
Correspondence correspondence_check(const ComplexMatrix& v, std::size_t dA, std::size_t dB);

struct LowerBoundReport {
  double operatorRateMax = 0.0;      // max over the grid of R(t)
  double tAtMax = 0.0;
  double stateRateAtMax = 0.0;       // Gamma(t) for U(t)|Phi>|Phi>, same t
  double sampledStateRateMax = 0.0;  // best Gamma(0) found by sampling
  std::size_t samples = 0;
  bool correspondenceHolds = false;  // |R - Gamma| < 1e-4
  bool lowerBoundHolds = false;      // R_max <= sampled max + 1e-6
};

/// Compares the maximal operator rate of exp(-iHt) with state rates.
///
/// The sampled maximum is the best Gamma(0) over `samples` random pure
/// states on (A'A | BB') with ancillas of dimension dA and dB, followed by
/// a stochastic hill climb from the best few. Every step is seeded.
LowerBoundReport lower_bound_check(const ComplexMatrix& h, std::size_t dA, std::size_t dB,
                                   std::span<const double> tGrid, std::size_t samples,
                                   std::uint64_t seed);

}  // namespace entcap

#endif  // ENTCAP_OPERATOR_ENTANGLEMENT_HPP
