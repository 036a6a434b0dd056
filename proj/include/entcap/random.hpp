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

#ifndef ENTCAP_RANDOM_HPP
#define ENTCAP_RANDOM_HPP

#include <cstddef>
#include <random>

#include "entcap/numerics.hpp"
#include "entcap/state_space.hpp"

namespace entcap {

using Rng = std::mt19937_64;

/// Haar-distributed unit vector (normalized complex Gaussian).
ComplexVector random_unit_vector(std::size_t n, Rng& rng);
BipartiteState random_state(std::size_t dA, std::size_t dB, Rng& rng);
/// Haar unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
/// (G + G^dagger) / 2 with standard complex Gaussian G.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

}  // namespace entcap

#endif  // ENTCAP_RANDOM_HPP
