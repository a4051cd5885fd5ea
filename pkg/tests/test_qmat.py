"""Unit tests for the dense linear-algebra layer."""

import math

import numpy as np
import pytest

from spincorr import qmat
from spincorr.errors import (
    DimensionMismatch,
    InvalidState,
    NonFiniteParameter,
    NonHermitianInput,
    NotPositiveSemidefinite,
)
from spincorr.rng import Lcg, gaussian_matrix, random_state

from helpers import bell_psi_plus, ground_product_state


def _exchange_with_antisymmetric_term() -> np.ndarray:
    """0.5 (XX + YY + ZZ + XY - YX): reference matrix with known spectrum."""
    sx, sy, sz = qmat.PAULIS
    h = qmat.kron(sx, sx) + qmat.kron(sy, sy) + qmat.kron(sz, sz)
    h = h + qmat.kron(sx, sy) - qmat.kron(sy, sx)
    return 0.5 * h


def test_pauli_constants():
    for sigma in qmat.PAULIS:
        assert np.array_equal(sigma.conj().T, sigma)
        assert np.allclose(sigma @ sigma, np.eye(2), atol=1e-15)
        assert abs(np.trace(sigma)) == 0.0
    assert np.allclose(qmat.SIGMA_X @ qmat.SIGMA_Y, 1j * qmat.SIGMA_Z, atol=1e-15)


def test_hermitian_eig_pauli_z():
    eig = qmat.hermitian_eig(qmat.SIGMA_Z)
    assert np.allclose(eig.values, [-1.0, 1.0], atol=1e-15)
    assert np.allclose(eig.vectors.conj().T @ eig.vectors, np.eye(2), atol=1e-14)


def test_hermitian_eig_identity():
    eig = qmat.hermitian_eig(np.eye(4, dtype=complex))
    assert np.allclose(eig.values, np.ones(4), atol=1e-15)


def test_hermitian_eig_known_coupling_spectrum():
    eig = qmat.hermitian_eig(_exchange_with_antisymmetric_term())
    expected = [-0.5 - math.sqrt(2.0), 0.5, 0.5, -0.5 + math.sqrt(2.0)]
    assert np.allclose(eig.values, expected, atol=1e-10)


def test_hermitian_eig_rejects_non_hermitian():
    m = np.zeros((2, 2), dtype=complex)
    m[0, 1] = 1.0  # no conjugate partner
    with pytest.raises(NonHermitianInput):
        qmat.hermitian_eig(m)


def test_hermitian_eig_random_invariants():
    rng = Lcg(3)
    for _ in range(50):
        g = gaussian_matrix(rng)
        h = (g + g.conj().T) / 2.0
        eig = qmat.hermitian_eig(h)
        assert np.all(np.diff(eig.values) >= 0.0)
        assert (
            math.sqrt(qmat.hs_norm2(eig.vectors.conj().T @ eig.vectors - np.eye(4)))
            <= 1e-12
        )
        rebuilt = (eig.vectors * eig.values) @ eig.vectors.conj().T
        assert math.sqrt(qmat.hs_norm2(rebuilt - h)) <= 1e-10


def test_gibbs_zero_hamiltonian_is_maximally_mixed():
    rho = qmat.gibbs(np.zeros((4, 4), dtype=complex), beta=1.0)
    assert np.allclose(rho, np.eye(4) / 4.0, atol=1e-15)


def test_gibbs_single_qubit_closed_form():
    rho = qmat.gibbs(qmat.SIGMA_Z, beta=1.0)
    p0 = 1.0 / (1.0 + math.exp(2.0))
    assert np.allclose(rho, np.diag([p0, 1.0 - p0]), atol=1e-14)


def test_gibbs_extreme_couplings_stay_finite():
    h = 50.0 * _exchange_with_antisymmetric_term()
    for beta in (1.0, 200.0):
        rho = qmat.gibbs(h, beta)
        assert np.all(np.isfinite(rho.view(float)))
        assert abs(np.trace(rho).real - 1.0) <= 1e-12
        assert np.linalg.eigvalsh(rho).min() >= -1e-12


def test_gibbs_rejects_bad_beta():
    h = qmat.SIGMA_Z
    for beta in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(NonFiniteParameter):
            qmat.gibbs(h, beta)


def test_kron_reference_matrices():
    yy = qmat.kron(qmat.SIGMA_Y, qmat.SIGMA_Y)
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 3], expected[1, 2], expected[2, 1], expected[3, 0] = -1, 1, 1, -1
    assert np.array_equal(yy, expected)
    zi = qmat.kron(qmat.SIGMA_Z, qmat.I2)
    assert np.array_equal(zi, np.diag([1, 1, -1, -1]).astype(complex))


def test_partial_trace_product_state_roundtrip():
    rng = Lcg(5)
    for _ in range(20):
        rho_a = random_state(rng, dim=2)
        rho_b = random_state(rng, dim=2)
        joint = qmat.kron(rho_a, rho_b)
        assert np.max(np.abs(qmat.partial_trace(joint, "B") - rho_a)) <= 1e-12
        assert np.max(np.abs(qmat.partial_trace(joint, "A") - rho_b)) <= 1e-12


def test_partial_trace_entangled_state_marginals():
    for subsystem in ("A", "B"):
        marginal = qmat.partial_trace(bell_psi_plus(), subsystem)
        assert np.allclose(marginal, np.eye(2) / 2.0, atol=1e-15)
    assert np.allclose(
        qmat.partial_trace(np.eye(4, dtype=complex) / 4.0, "B"),
        np.eye(2) / 2.0,
        atol=1e-15,
    )


def test_partial_trace_rejects_bad_input():
    with pytest.raises(DimensionMismatch):
        qmat.partial_trace(np.eye(2, dtype=complex) / 2.0, "B")
    with pytest.raises(ValueError):
        qmat.partial_trace(np.eye(4, dtype=complex) / 4.0, "C")


def test_hs_norm2_reference_values():
    assert qmat.hs_norm2(np.eye(4, dtype=complex)) == pytest.approx(4.0, abs=1e-15)
    assert qmat.hs_norm2(qmat.SIGMA_X) == pytest.approx(2.0, abs=1e-15)
    assert qmat.hs_norm2(bell_psi_plus() - np.eye(4) / 4.0) == pytest.approx(
        0.75, abs=1e-15
    )


def test_hs_norm2_expands_like_an_inner_product():
    rng = Lcg(7)
    for _ in range(20):
        a = gaussian_matrix(rng)
        b = gaussian_matrix(rng)
        cross = 2.0 * np.trace(a.conj().T @ b).real
        expanded = qmat.hs_norm2(a) + qmat.hs_norm2(b) + cross
        assert abs(qmat.hs_norm2(a + b) - expanded) <= 1e-10


def test_mat_sqrt_diagonal_reference():
    root = qmat.mat_sqrt(np.diag([4.0, 1.0, 0.0, 0.0]).astype(complex))
    assert np.allclose(root, np.diag([2.0, 1.0, 0.0, 0.0]), atol=1e-12)


def test_mat_sqrt_squares_back():
    rng = Lcg(9)
    for _ in range(20):
        rho = random_state(rng)
        root = qmat.mat_sqrt(rho)
        assert math.sqrt(qmat.hs_norm2(root @ root - rho)) <= 1e-9
        assert np.linalg.eigvalsh(root).min() >= -1e-12


def test_mat_sqrt_clamps_roundoff_negatives():
    m = np.diag([0.6, 0.4, 5e-11, -5e-11]).astype(complex)
    root = qmat.mat_sqrt(m)
    assert np.linalg.eigvalsh(root).min() >= 0.0
    assert math.sqrt(qmat.hs_norm2(root @ root - m)) <= 1e-9


def test_mat_sqrt_rejects_genuinely_negative():
    with pytest.raises(NotPositiveSemidefinite):
        qmat.mat_sqrt(np.diag([0.7, 0.3, 0.0, -5e-10]).astype(complex))


def test_validate_state_accepts_random_states():
    rng = Lcg(11)
    for _ in range(10):
        rho = random_state(rng)
        out = qmat.validate_state(rho)
        assert out.shape == (4, 4)


def test_validate_state_rejects_defects():
    good = ground_product_state()
    with pytest.raises(InvalidState):
        qmat.validate_state(np.eye(2, dtype=complex) / 2.0)  # wrong shape
    bad = good.copy()
    bad[0, 1] = 0.1  # not Hermitian
    with pytest.raises(InvalidState):
        qmat.validate_state(bad)
    with pytest.raises(InvalidState):
        qmat.validate_state(2.0 * good)  # trace 2
    with pytest.raises(InvalidState):
        qmat.validate_state(np.diag([0.6, 0.5, -0.1, 0.0]).astype(complex))
    nonfinite = good.copy()
    nonfinite[0, 0] = math.nan
    with pytest.raises(InvalidState):
        qmat.validate_state(nonfinite)
