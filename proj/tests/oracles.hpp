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

// Brute-force reference implementations used only by the tests. None of
// them calls into the library's decompositions.
#ifndef ENTCAP_TESTS_ORACLES_HPP
#define ENTCAP_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "entcap/numerics.hpp"

namespace oracle {

using entcap::Complex;
using entcap::ComplexMatrix;
using entcap::ComplexVector;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

/// exp(-i H t) by scaling and squaring of a Taylor series.
inline ComplexMatrix expm(const ComplexMatrix& h, double t) {
  const std::size_t n = h.rows();
  double norm = 0.0;
  for (Complex z : h.entries()) norm += std::norm(z);
  norm = std::sqrt(norm) * std::abs(t);
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const Complex scale = Complex{0.0, -t} / std::pow(2.0, squarings);
  ComplexMatrix term = ComplexMatrix::identity(n);
  ComplexMatrix sum = ComplexMatrix::identity(n);
  for (int k = 1; k < 30; ++k) {
    term = matmul(term, h);
    for (Complex& z : term.entries()) z *= scale / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = matmul(sum, sum);
  return sum;
}

/// Tr_B of |psi><psi| with explicit index sums.
inline ComplexMatrix reduced_a(std::span<const Complex> psi, std::size_t dA, std::size_t dB) {
  ComplexMatrix rho(dA, dA);
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t ap = 0; ap < dA; ++ap)
      for (std::size_t b = 0; b < dB; ++b) rho(a, ap) += psi[a * dB + b] * std::conj(psi[ap * dB + b]);
  return rho;
}

/// Eigenvalues of a 2x2 Hermitian matrix, descending.
inline std::pair<double, double> eig2(const ComplexMatrix& m) {
  const double tr = (m(0, 0) + m(1, 1)).real();
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  return {tr / 2.0 + disc, tr / 2.0 - disc};
}

inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Wootters concurrence |<psi| sy(x)sy |psi*>| of a two-qubit pure state.
inline double spin_flip_concurrence(std::span<const Complex> psi) {
  // sy (x) sy maps |00>,|01>,|10>,|11> to -|11>, |10>, |01>, -|00>.
  const Complex flipped[4] = {-std::conj(psi[3]), std::conj(psi[2]), std::conj(psi[1]), -std::conj(psi[0])};
  Complex acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(psi[i]) * flipped[i];
  return std::abs(acc);
}

/// Root of ln(x/(1-x)) = 2/(2x-1) on [0.6, 0.99] by plain bisection.
inline double stationarity_root() {
  auto g = [](double x) { return std::log(x / (1.0 - x)) - 2.0 / (2.0 * x - 1.0); };
  double lo = 0.6;
  double hi = 0.99;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((g(lo) < 0.0) == (g(mid) < 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double two_term(double x) { return 2.0 * std::sqrt(x * (1.0 - x)) * std::log2(x / (1.0 - x)); }

inline double max_abs(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

}  // namespace oracle

#endif  // ENTCAP_TESTS_ORACLES_HPP
