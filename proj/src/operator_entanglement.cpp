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

#include "entcap/operator_entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entcap/capability.hpp"
#include "entcap/errors.hpp"
#include "entcap/random.hpp"

namespace entcap {

namespace {

void require_split(const ComplexMatrix& v, std::size_t dA, std::size_t dB, const char* who) {
  if (dA == 0 || dB == 0 || !v.is_square() || v.rows() != dA * dB) {
    throw DimensionError(std::string(who) + ": operator of size " + std::to_string(v.rows()) + "x" +
                         std::to_string(v.cols()) + " does not act on " + std::to_string(dA) + "x" +
                         std::to_string(dB));
  }
}

constexpr double kOperatorRankCutoff = 1e-9;

std::vector<double> operator_coefficients(const ComplexMatrix& v, std::size_t dA, std::size_t dB) {
  const SingularValueDecomposition d = svd(reshuffle(v, dA, dB));
  std::vector<double> s;
  for (double x : d.singular)
    if (!d.singular.empty() && x > kOperatorRankCutoff * d.singular.front()) s.push_back(x);
  return s;
}

// Gamma(0) on a state of the ancilla-extended space; used as the objective
// when sampling.
double extended_rate(const ComplexMatrix& h_ext, std::size_t dA, std::size_t dB,
                     const ComplexVector& psi) {
  return rate_zero_general(h_ext, BipartiteState(dA * dA, dB * dB, psi));
}

}  // namespace

ComplexMatrix OperatorSchmidt::reconstruct() const {
  if (coefficients.empty()) return {};
  ComplexMatrix out = coefficients[0] * kron(factorsA[0], factorsB[0]);
  for (std::size_t n = 1; n < rank(); ++n) out += coefficients[n] * kron(factorsA[n], factorsB[n]);
  return out;
}

ComplexMatrix reshuffle(const ComplexMatrix& v, std::size_t dA, std::size_t dB) {
  require_split(v, dA, dB, "reshuffle");
  ComplexMatrix m(dA * dA, dB * dB);
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t ap = 0; ap < dA; ++ap)
      for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t bp = 0; bp < dB; ++bp) m(a * dA + ap, b * dB + bp) = v(a * dB + b, ap * dB + bp);
  return m;
}

OperatorSchmidt op_schmidt(const ComplexMatrix& v, std::size_t dA, std::size_t dB) {
  const SingularValueDecomposition d = svd(reshuffle(v, dA, dB));
  OperatorSchmidt out;
  for (std::size_t n = 0; n < d.singular.size(); ++n) {
    if (!(d.singular[n] > kOperatorRankCutoff * d.singular.front())) break;
    out.coefficients.push_back(d.singular[n]);
    ComplexMatrix a(dA, dA);
    for (std::size_t i = 0; i < dA; ++i)
      for (std::size_t k = 0; k < dA; ++k) a(i, k) = d.u(i * dA + k, n);
    ComplexMatrix b(dB, dB);
    for (std::size_t i = 0; i < dB; ++i)
      for (std::size_t k = 0; k < dB; ++k) b(i, k) = d.vh(n, i * dB + k);
    out.factorsA.push_back(std::move(a));
    out.factorsB.push_back(std::move(b));
  }
  return out;
}

std::vector<double> op_weights(const ComplexMatrix& v, std::size_t dA, std::size_t dB) {
  require_split(v, dA, dB, "op_weights");
  if (!is_unitary(v, 1e-8)) throw NotUnitaryError("operator entanglement: operator is not unitary within 1e-8");
  std::vector<double> p = operator_coefficients(v, dA, dB);
  const double norm = static_cast<double>(dA * dB);
  for (auto& x : p) x = x * x / norm;
  return p;
}

double op_entanglement(const ComplexMatrix& v, std::size_t dA, std::size_t dB) {
  double e = 0.0;
  for (double p : op_weights(v, dA, dB))
    if (p > 0.0) e -= p * std::log2(p);
  return std::max(e, 0.0);
}

double op_concurrence(const ComplexMatrix& v, std::size_t dA, std::size_t dB) {
  const std::vector<double> p = op_weights(v, dA, dB);
  if (p.size() > 2) {
    throw RankError("op_concurrence: operator Schmidt rank " + std::to_string(p.size()) + " exceeds 2");
  }
  return p.size() < 2 ? 0.0 : 2.0 * std::sqrt(p[0] * p[1]);
}

double u1_entanglement_analytic(double t) {
  const double c2 = std::cos(t) * std::cos(t);
  const double s2 = std::sin(t) * std::sin(t);
  double e = 0.0;
  if (c2 > 0.0) e -= c2 * std::log2(c2);
  if (s2 > 0.0) e -= s2 * std::log2(s2);
  return e;
}

double u1_rate_analytic(double t) {
  const double s = std::sin(t);
  const double c = std::cos(t);
  if (s == 0.0 || c == 0.0) return 0.0;
  return std::sin(2.0 * t) * std::log2((c * c) / (s * s));
}

double op_rate(const ProductHamiltonian& h, double t) {
  auto e = [&](double s) { return op_entanglement(evolution(h, s), h.dA(), h.dB()); };
  return central_diff(e, t, 1e-6);
}

double op_rate_general(const ComplexMatrix& h, std::size_t dA, std::size_t dB, double t) {
  require_split(h, dA, dB, "op_rate_general");
  auto e = [&](double s) { return op_entanglement(expm_hermitian(h, s), dA, dB); };
  return central_diff(e, t, 1e-6);
}

OperatorRateCurve op_rate_max(const ProductHamiltonian& h) {
  constexpr double kStep = 1e-3;
  const double quarter = std::numbers::pi / 4.0;
  const double upper = std::numbers::pi / 2.0 - kStep;

  OperatorRateCurve curve;
  std::size_t best = 0;
  for (std::size_t i = 1;; ++i) {
    const double t = kStep * static_cast<double>(i);
    if (t > upper + 1e-12) break;
    const double e = op_entanglement(evolution(h, t), h.dA(), h.dB());
    curve.samples.push_back({t, e, op_rate(h, t)});
    if (t <= quarter + 1e-12 && curve.samples.back().rate > curve.samples[best].rate) {
      best = curve.samples.size() - 1;
    }
  }
  const double lo = best == 0 ? curve.samples.front().t : curve.samples[best - 1].t;
  const double hi = std::min(curve.samples[best + 1].t, quarter);
  const ScalarMaxResult refined = golden_max([&](double t) { return op_rate(h, t); }, lo, hi, 1e-9);
  curve.rMax = refined.maximum;
  curve.tStar = refined.argmax;
  if (curve.samples[best].rate > curve.rMax) {
    curve.rMax = curve.samples[best].rate;
    curve.tStar = curve.samples[best].t;
  }
  return curve;
}

namespace {

BipartiteState doubled_max_entangled(std::size_t dA, std::size_t dB) {
  // |Phi>_{A'A} (x) |Phi>_{BB'}, index ((a'*dA + a)*dB + b)*dB + b'.
  ComplexVector amps(dA * dA * dB * dB);
  const double w = 1.0 / std::sqrt(static_cast<double>(dA * dB));
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t b = 0; b < dB; ++b) amps[((a * dA + a) * dB + b) * dB + b] = w;
  return BipartiteState::from_unnormalized(dA * dA, dB * dB, std::move(amps));
}

}  // namespace

Correspondence correspondence_check(const ComplexMatrix& v, std::size_t dA, std::size_t dB) {
  require_split(v, dA, dB, "correspondence_check");
  Correspondence out;
  out.eOperator = op_entanglement(v, dA, dB);
  out.eState = entropy(apply_with_ancillas(v, doubled_max_entangled(dA, dB), dA, dB));
  return out;
}

LowerBoundReport lower_bound_check(const ComplexMatrix& h, std::size_t dA, std::size_t dB,
                                   std::span<const double> tGrid, std::size_t samples,
                                   std::uint64_t seed) {
  require_split(h, dA, dB, "lower_bound_check");
  if (!is_hermitian(h)) throw NotHermitianError("lower_bound_check: Hamiltonian is not Hermitian");
  if (tGrid.empty()) throw DomainError("lower_bound_check: empty time grid");

  LowerBoundReport report;
  report.samples = samples;
  report.operatorRateMax = -std::numeric_limits<double>::infinity();
  for (double t : tGrid) {
    const double r = op_rate_general(h, dA, dB, t);
    if (r > report.operatorRateMax) {
      report.operatorRateMax = r;
      report.tAtMax = t;
    }
  }

  const ComplexMatrix h_ext = kron(kron(ComplexMatrix::identity(dA), h), ComplexMatrix::identity(dB));
  report.stateRateAtMax = rate_commutator(h_ext, doubled_max_entangled(dA, dB), report.tAtMax);
  report.correspondenceHolds = std::abs(report.stateRateAtMax - report.operatorRateMax) < 1e-4;

  Rng rng(seed);
  const std::size_t n = dA * dA * dB * dB;
  std::vector<std::pair<double, ComplexVector>> pool;
  pool.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    ComplexVector psi = random_unit_vector(n, rng);
    const double g = extended_rate(h_ext, dA, dB, psi);
    pool.emplace_back(g, std::move(psi));
  }
  std::sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  double best = pool.empty() ? 0.0 : pool.front().first;

  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t starts = std::min<std::size_t>(4, pool.size());
  for (std::size_t s = 0; s < starts; ++s) {
    auto [value, psi] = pool[s];
    double sigma = 0.3;
    int failures = 0;
    while (sigma > 1e-7) {
      ComplexVector trial = psi;
      for (auto& z : trial) z += sigma * Complex{normal(rng), normal(rng)};
      trial = normalized(trial);
      const double g = extended_rate(h_ext, dA, dB, trial);
      if (g > value) {
        value = g;
        psi = std::move(trial);
        failures = 0;
      } else if (++failures >= 40) {
        sigma *= 0.5;
        failures = 0;
      }
    }
    best = std::max(best, value);
  }
  report.sampledStateRateMax = best;
  report.lowerBoundHolds = report.operatorRateMax <= report.sampledStateRateMax + 1e-6;
  return report;
}

}  // namespace entcap
