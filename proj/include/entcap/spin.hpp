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

#ifndef ENTCAP_SPIN_HPP
#define ENTCAP_SPIN_HPP

#include <cstddef>

#include "entcap/numerics.hpp"

namespace entcap {

/// Spin quantum number j, stored as the integer 2j > 0.
class Spin {
 public:
  /// Throws DomainError unless 2j is a positive integer.
  static Spin from_twice(int twice_j);
  static Spin from_value(double j);

  int twice() const noexcept { return twice_; }
  double value() const noexcept { return 0.5 * twice_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(twice_) + 1; }

  friend bool operator==(Spin, Spin) = default;

 private:
  explicit Spin(int twice) : twice_(twice) {}
  int twice_;
};

// Matrices in the |j; m> basis ordered m = -j .. j, i.e. by the number
// N = J_z + j = 0 .. 2j.
ComplexMatrix spin_raising(Spin j);
ComplexMatrix spin_lowering(Spin j);
ComplexMatrix spin_z(Spin j);

}  // namespace entcap

#endif  // ENTCAP_SPIN_HPP
