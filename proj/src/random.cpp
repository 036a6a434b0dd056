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

#include "entcap/random.hpp"

#include <utility>

namespace entcap {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (auto& z : v) z = gaussian(rng);
  return normalized(v);
}

BipartiteState random_state(std::size_t dA, std::size_t dB, Rng& rng) {
  return BipartiteState::from_unnormalized(dA, dB, random_unit_vector(dA * dB, rng));
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    ComplexVector x(n);
    for (auto& z : x) z = gaussian(rng);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < c; ++k) {
        const ComplexVector uk = u.column_vector(k);
        const Complex ov = inner(uk, x);
        for (std::size_t r = 0; r < n; ++r) x[r] -= ov * uk[r];
      }
    u.set_column(c, normalized(x));
  }
  return u;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (auto& z : g.entries()) z = gaussian(rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace entcap
