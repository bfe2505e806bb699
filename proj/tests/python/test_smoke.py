# Copyright 2026 The qmalocal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import numpy as np
import pytest

import qmalocal as q

ACCEPTING = "qubits 2\nproof 1\nX 1\nCNOT 1 0\nH 1\nH 1\n"
REJECTING = "qubits 2\nproof 1\nCNOT 0 1\nCNOT 1 0\n"


def test_simulation():
    c = q.parse_circuit(ACCEPTING)
    assert (c.num_qubits, c.proof_qubits, c.num_gates) == (2, 1, 4)
    proof = np.array([1, 0], dtype=complex)
    assert q.acceptance_probability(c, proof) == pytest.approx(1.0, abs=1e-12)
    p_max, best = q.optimal_acceptance(c)
    assert p_max == pytest.approx(1.0, abs=1e-12)
    assert np.linalg.norm(best) == pytest.approx(1.0)


def test_reduction_and_spectrum():
    c = q.parse_circuit(ACCEPTING)
    h = q.build_3local(c)
    assert h.n == 6
    assert q.locality(h) <= 3
    dense = q.assemble(h)
    assert np.allclose(dense, dense.conj().T)
    lam, residual = q.min_eigenvalue(dense)
    # slightly negative: hopping terms leak into illegal clock strings
    assert -1e-6 <= lam <= 1e-10
    assert lam == pytest.approx(np.linalg.eigvalsh(dense)[0], abs=1e-7)
    unary, reference = q.history_state(c, np.array([1, 0], dtype=complex))
    assert q.rayleigh(dense, unary) == pytest.approx(0.0, abs=1e-12)
    compressed = q.compress_legal(dense, 2, 4)
    assert np.abs(compressed - q.build_reference(c)).max() <= 1e-12


def test_round_trip_text():
    h = q.build_3local(q.parse_circuit(ACCEPTING))
    again = q.read_hamiltonian(q.write_hamiltonian(h))
    assert np.abs(q.assemble(again) - q.assemble(h)).max() <= 1e-13


def test_verify_reports():
    report = q.verify_soundness(q.parse_circuit(REJECTING), 1e-3)
    assert "verdict = sound-ok" in report
    report = q.verify_completeness(
        q.parse_circuit(ACCEPTING), np.array([1, 0], dtype=complex), 1e-3)
    assert "verdict = complete-ok" in report
    cos_theta, sin2t = q.angle_diagnostic(q.parse_circuit(REJECTING))
    assert cos_theta < 1.0 and sin2t > 0.0


def test_sat_and_decide():
    h = q.sat_to_hamiltonian(1, [[1], [-1]])
    lam, _, method = q.min_eigenvalue_local(h)
    assert lam == 1.0
    assert q.decide(h, 0.1, 0.5) == 0
    normalized, a, b = q.normalize_terms(h, 0.1, 0.5)
    assert q.decide(normalized, a, b) == 0


def test_errors():
    with pytest.raises(ValueError):
        q.parse_circuit("qubits 1\nproof 1\nFOO 0\n")
    with pytest.raises(ValueError):
        q.sat_to_hamiltonian(1, [[1, -1]])
