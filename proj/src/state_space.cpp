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

#include "entcap/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "entcap/errors.hpp"
#include "entcap/self_inverse.hpp"

namespace entcap {

BipartiteState::BipartiteState(std::size_t dA, std::size_t dB, ComplexVector amplitudes)
    : dA_(dA), dB_(dB), amplitudes_(std::move(amplitudes)) {
  if (dA_ == 0 || dB_ == 0 || amplitudes_.size() != dA_ * dB_) {
    throw DimensionError("BipartiteState: " + std::to_string(amplitudes_.size()) +
                         " amplitudes for split " + std::to_string(dA_) + "x" + std::to_string(dB_));
  }
  const double n = norm(amplitudes_);
  if (std::abs(n - 1.0) > 1e-12) {
    throw DomainError("BipartiteState: amplitudes not normalized (norm " + std::to_string(n) + ")");
  }
}

BipartiteState BipartiteState::from_unnormalized(std::size_t dA, std::size_t dB,
                                                 ComplexVector amplitudes) {
  return BipartiteState(dA, dB, normalized(amplitudes));
}

BipartiteState BipartiteState::product(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector amps(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) amps[i * b.size() + k] = a[i] * b[k];
  return from_unnormalized(a.size(), b.size(), std::move(amps));
}

ComplexMatrix BipartiteState::amplitude_matrix() const {
  return ComplexMatrix(dA_, dB_, amplitudes_);
}

ComplexMatrix BipartiteState::density() const { return outer(amplitudes_, amplitudes_); }

ComplexMatrix BipartiteState::reduced_density(Subsystem keep) const {
  const ComplexMatrix psi = amplitude_matrix();
  // rho_A = Psi Psi^dagger, rho_B = Psi^T conj(Psi)
  if (keep == Subsystem::A) return psi * psi.adjoint();
  return psi.transpose() * psi.conjugate();
}

BipartiteState BipartiteState::swapped() const {
  ComplexVector amps(amplitudes_.size());
  for (std::size_t a = 0; a < dA_; ++a)
    for (std::size_t b = 0; b < dB_; ++b) amps[b * dA_ + a] = amplitudes_[a * dB_ + b];
  return BipartiteState(dB_, dA_, std::move(amps));
}

BipartiteState BipartiteState::with_canonical_phase() const {
  ComplexVector amps = amplitudes_;
  for (const auto& z : amps) {
    if (std::abs(z) > 1e-12) {
      const Complex fix = std::conj(z) / std::abs(z);
      for (auto& w : amps) w *= fix;
      break;
    }
  }
  return BipartiteState(dA_, dB_, std::move(amps));
}

double fidelity(const BipartiteState& u, const BipartiteState& v) {
  if (u.dA() != v.dA() || u.dB() != v.dB()) throw DimensionError("fidelity: split mismatch");
  return std::abs(inner(u.amplitudes(), v.amplitudes()));
}

BipartiteState SchmidtDecomposition::reconstruct() const {
  const std::size_t dA = vectorsA.rows();
  const std::size_t dB = vectorsB.rows();
  ComplexVector amps(dA * dB);
  for (std::size_t n = 0; n < rank(); ++n) {
    const double w = std::sqrt(coefficients[n]);
    for (std::size_t a = 0; a < dA; ++a)
      for (std::size_t b = 0; b < dB; ++b) amps[a * dB + b] += w * vectorsA(a, n) * vectorsB(b, n);
  }
  return BipartiteState::from_unnormalized(dA, dB, std::move(amps));
}

SchmidtDecomposition schmidt(const BipartiteState& state) {
  const SingularValueDecomposition d = svd(state.amplitude_matrix());
  std::size_t rank = 0;
  while (rank < d.singular.size() && d.singular[rank] * d.singular[rank] >= kSchmidtThreshold) {
    ++rank;
  }
  SchmidtDecomposition out;
  out.coefficients.resize(rank);
  out.vectorsA = ComplexMatrix(state.dA(), rank);
  out.vectorsB = ComplexMatrix(state.dB(), rank);
  for (std::size_t n = 0; n < rank; ++n) {
    out.coefficients[n] = d.singular[n] * d.singular[n];
    for (std::size_t a = 0; a < state.dA(); ++a) out.vectorsA(a, n) = d.u(a, n);
    for (std::size_t b = 0; b < state.dB(); ++b) out.vectorsB(b, n) = d.vh(n, b);
  }
  return out;
}

double entropy(const BipartiteState& state) {
  double s = 0.0;
  for (double lambda : schmidt(state).coefficients) s -= lambda * std::log2(lambda);
  return std::max(s, 0.0);
}

double pure_concurrence(const BipartiteState& state) {
  // 1 - sum(l^2) = 2 sum_{i<j} l_i l_j, summed pairwise to avoid cancellation near product states.
  const std::vector<double> lambda = schmidt(state).coefficients;
  double cross = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t k = i + 1; k < lambda.size(); ++k) cross += lambda[i] * lambda[k];
  return 2.0 * std::sqrt(cross);
}

double concurrence_two_term(Complex overlapA, Complex overlapB, double t) {
  const double oa = std::abs(overlapA);
  const double ob = std::abs(overlapB);
  if (oa > 1.0 + 1e-12 || ob > 1.0 + 1e-12) {
    throw DomainError("concurrence_two_term: overlap modulus exceeds 1");
  }
  const double visibility = std::max(0.0, (1.0 - oa * oa) * (1.0 - ob * ob));
  return std::abs(std::sin(2.0 * t)) * std::sqrt(visibility);
}

PseudoQubitPair make_pseudo_qubit_pair(const SelfInverseFactor& xa, const SelfInverseFactor& xb,
                                       std::span<const Complex> gamma,
                                       std::span<const Complex> delta) {
  PseudoQubitPair p;
  p.gamma = normalized(gamma);
  p.delta = normalized(delta);
  p.gammaBar = matvec(xa.matrix(), p.gamma);
  p.deltaBar = matvec(xb.matrix(), p.delta);
  p.overlapA = inner(p.gamma, p.gammaBar);
  p.overlapB = inner(p.delta, p.deltaBar);
  return p;
}

BipartiteState optimal_input(const SelfInverseFactor& xa, const SelfInverseFactor& xb, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("optimal_input: weight must lie in (0, 1)");
  const ComplexVector pa = xa.eigenplus().column_vector(0);
  const ComplexVector ma = xa.eigenminus().column_vector(0);
  const ComplexVector pb = xb.eigenplus().column_vector(0);
  const ComplexVector mb = xb.eigenminus().column_vector(0);

  const std::size_t dA = xa.dim();
  const std::size_t dB = xb.dim();
  const Complex even_weight = std::sqrt(x) / 2.0;
  const Complex odd_weight = -kI * std::sqrt(1.0 - x) / 2.0;
  ComplexVector amps(dA * dB);
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t b = 0; b < dB; ++b) {
      amps[a * dB + b] = even_weight * (pa[a] + ma[a]) * (pb[b] + mb[b]) +
                         odd_weight * (pa[a] - ma[a]) * (pb[b] - mb[b]);
    }
  return BipartiteState::from_unnormalized(dA, dB, std::move(amps)).with_canonical_phase();
}

ComplexVector spin_coherent(Spin j, Complex eta) {
  // exp(G) with G = eta J+ - conj(eta) J- anti-Hermitian; iG is Hermitian and
  // exp(G) = exp(-i (iG)).
  const ComplexMatrix generator =
      kI * (eta * spin_raising(j) - std::conj(eta) * spin_lowering(j));
  const ComplexMatrix rotation = expm_hermitian(generator, 1.0);
  return normalized(rotation.column_vector(0));
}

Complex coherent_branch_overlap(Spin j, Complex eta) {
  return inner(spin_coherent(j, eta), spin_coherent(j, -eta));
}

BipartiteState entangled_superposition(std::span<const Complex> a, std::span<const Complex> b,
                                       std::span<const Complex> aBar,
                                       std::span<const Complex> bBar, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("entangled superposition: x must lie in (0, 1)");
  if (a.size() != aBar.size() || b.size() != bBar.size()) {
    throw DimensionError("entangled superposition: branch dimensions differ");
  }
  const std::size_t dA = a.size();
  const std::size_t dB = b.size();
  const double wa = std::sqrt(x);
  const Complex wb = kI * std::sqrt(1.0 - x);
  ComplexVector amps(dA * dB);
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t k = 0; k < dB; ++k) amps[i * dB + k] = wa * a[i] * b[k] + wb * aBar[i] * bBar[k];
  if (norm(amps) < 1e-12) throw DomainError("entangled superposition: branches cancel");
  return BipartiteState::from_unnormalized(dA, dB, std::move(amps));
}

BipartiteState ecs(Spin j, Complex eta, double x) {
  const ComplexVector plus = spin_coherent(j, eta);
  const ComplexVector minus = spin_coherent(j, -eta);
  if (std::abs(inner(plus, minus)) > 1.0 - 1e-9) {
    throw DomainError("ecs: |eta> and |-eta> are parallel, the superposition is a product state");
  }
  return entangled_superposition(plus, plus, minus, minus, x);
}

ComplexVector binomial_state(int m, double p, std::size_t d) {
  if (m < 0) throw DomainError("binomial_state: M must be non-negative");
  if (static_cast<std::size_t>(m) >= d) {
    throw DimensionError("binomial_state: M = " + std::to_string(m) +
                         " does not fit in a Fock truncation of " + std::to_string(d) + " levels");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binomial_state: p must lie in [0, 1]");
  ComplexVector v(d);
  for (int n = 0; n <= m; ++n) {
    const double log_choose = std::lgamma(m + 1.0) - std::lgamma(n + 1.0) - std::lgamma(m - n + 1.0);
    const double weight = std::exp(log_choose) * std::pow(p, n) * std::pow(1.0 - p, m - n);
    v[static_cast<std::size_t>(n)] = std::sqrt(weight);
  }
  return normalized(v);
}

BipartiteState max_entangled(std::size_t d) {
  if (d < 2) throw DomainError("max_entangled: d must be at least 2");
  ComplexVector amps(d * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t n = 0; n < d; ++n) amps[n * d + n] = w;
  return BipartiteState(d, d, std::move(amps));
}

}  // namespace entcap
