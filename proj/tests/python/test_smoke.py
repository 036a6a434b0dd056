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

import json
import math

import numpy as np
import pytest

import entcap


def bisection_root():
    g = lambda x: math.log(x / (1 - x)) - 2 / (2 * x - 1)
    lo, hi = 0.6, 0.99
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if (g(lo) < 0) == (g(mid) < 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_capability_bound():
    c = entcap.capability_bound()
    assert abs(c["beta"] - 1.9123) < 2e-4
    assert abs(c["x0"] - bisection_root()) < 1e-8
    assert entcap.two_term_rate(c["x0"]) == pytest.approx(c["beta"], abs=1e-12)


def test_optimal_state_saturates_bound():
    beta = entcap.capability_bound()["beta"]
    for a, b in [(entcap.pauli_z(), entcap.pauli_z()), (entcap.parity(1), entcap.parity(1)),
                 (entcap.parity(0.5), entcap.boson_parity(16))]:
        value, state = entcap.capability(a, b)
        h = entcap.ProductHamiltonian(a, b)
        assert value == pytest.approx(beta, abs=1e-12)
        assert entcap.rate(h.matrix, state) == pytest.approx(beta, abs=1e-8)
        assert entcap.rate_finite_difference(h.matrix, state) == pytest.approx(beta, abs=1e-4)


def test_state_entropy_against_numpy():
    rng = np.random.default_rng(3)
    psi = rng.normal(size=6) + 1j * rng.normal(size=6)
    state = entcap.State(psi, 2, 3)
    m = psi.reshape(2, 3) / np.linalg.norm(psi)
    p = np.linalg.svd(m, compute_uv=False) ** 2
    expected = -sum(x * math.log2(x) for x in p if x > 1e-15)
    assert state.entropy() == pytest.approx(expected, abs=1e-12)
    assert sorted(state.schmidt_coefficients(), reverse=True) == pytest.approx(sorted(p, reverse=True), abs=1e-12)
    saved = json.loads(state.to_json())
    assert (saved["dA"], saved["dB"]) == (2, 3)


def test_evolution_and_operator_entanglement():
    h = entcap.ProductHamiltonian(entcap.pauli_z(), entcap.pauli_z())
    t = 0.3
    u = h.evolution(t)
    expected = math.cos(t) * np.eye(4) - 1j * math.sin(t) * np.diag([1, -1, -1, 1])
    assert np.allclose(u, expected, atol=1e-14)
    c2 = math.cos(t) ** 2
    assert entcap.op_entanglement(u, 2, 2) == pytest.approx(-c2 * math.log2(c2) - (1 - c2) * math.log2(1 - c2), abs=1e-9)
    r_max, t_star = entcap.op_rate_max(h)
    assert r_max == pytest.approx(entcap.capability_bound()["beta"], abs=2e-4)
    assert t_star == pytest.approx(math.acos(math.sqrt(bisection_root())), abs=1e-5)


def test_swap_operator_schmidt():
    swap = np.zeros((4, 4))
    for a in range(2):
        for b in range(2):
            swap[b * 2 + a, a * 2 + b] = 1
    assert entcap.op_schmidt_coefficients(swap, 2, 2) == pytest.approx([1, 1, 1, 1], abs=1e-12)


def test_gate_capability():
    z = entcap.pauli_z()
    for t in (0.2, math.pi / 4, 1.1):
        assert entcap.gate_capability(z, z, t) == pytest.approx(abs(math.sin(2 * t)), abs=1e-6)


def test_rejected_inputs():
    with pytest.raises(entcap.TrivialFactorError):
        entcap.Factor(np.eye(2))
    with pytest.raises(entcap.NotHermitianError):
        entcap.Factor(np.array([[0, 1], [0, 0]]))
    with pytest.raises(entcap.NotInvolutionError):
        entcap.Factor(np.diag([1.0, 0.5]))
    with pytest.raises(entcap.Error):
        entcap.boson_parity(1)


def test_verify_smoke():
    rows = entcap.verify(ceiling_samples=200)
    assert [r["id"] for r in rows] == list(range(1, 11))
    assert all(r["passed"] for r in rows)
