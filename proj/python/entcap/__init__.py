# Copyright 2026 The entcap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Entanglement capability of self-inverse product Hamiltonians."""

from ._core import (
    DimensionError,
    DomainError,
    Error,
    Factor,
    InvalidInputError,
    NotHermitianError,
    NotInvolutionError,
    NotUnitaryError,
    NumericalConsistencyError,
    ProductHamiltonian,
    RankError,
    State,
    TrivialFactorError,
    boson_parity,
    capability,
    capability_bound,
    ecs,
    gate_capability,
    op_entanglement,
    op_rate,
    op_rate_max,
    op_schmidt_coefficients,
    optimal_input,
    parity,
    pauli_z,
    rate,
    rate_commutator,
    rate_finite_difference,
    two_term_rate,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
