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

#include "entcap/spin.hpp"

#include <cmath>
#include <string>

#include "entcap/errors.hpp"

namespace entcap {

Spin Spin::from_twice(int twice_j) {
  if (twice_j <= 0) throw DomainError("spin: 2j must be a positive integer, got " + std::to_string(twice_j));
  return Spin(twice_j);
}

Spin Spin::from_value(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(twice) || std::abs(twice - rounded) > 1e-9 || rounded < 1.0) {
    throw DomainError("spin: j must be a positive half-integer, got " + std::to_string(j));
  }
  return Spin(static_cast<int>(rounded));
}

ComplexMatrix spin_raising(Spin j) {
  const std::size_t d = j.dim();
  const double jj = j.value();
  ComplexMatrix m(d, d);
  // J+ |j; mz> = sqrt((j - mz)(j + mz + 1)) |j; mz + 1>, row index n = mz + j.
  for (std::size_t n = 0; n + 1 < d; ++n) {
    const double mz = static_cast<double>(n) - jj;
    m(n + 1, n) = std::sqrt((jj - mz) * (jj + mz + 1.0));
  }
  return m;
}

ComplexMatrix spin_lowering(Spin j) { return spin_raising(j).adjoint(); }

ComplexMatrix spin_z(Spin j) {
  const std::size_t d = j.dim();
  ComplexMatrix m(d, d);
  for (std::size_t n = 0; n < d; ++n) m(n, n) = static_cast<double>(n) - j.value();
  return m;
}

}  // namespace entcap
