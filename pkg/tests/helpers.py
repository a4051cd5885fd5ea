"""Shared builders for the test suite: reference states and seeded streams."""

import numpy as np

from spincorr.bloch import BlochForm, decompose, reconstruct
from spincorr.rng import Lcg, random_state


def bell_psi_plus() -> np.ndarray:
    """Density matrix of (|01> + |10>)/sqrt(2)."""
    m = np.zeros((4, 4), dtype=complex)
    m[1, 1] = m[2, 2] = m[1, 2] = m[2, 1] = 0.5
    return m


def ground_product_state() -> np.ndarray:
    """Density matrix of |00>."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = 1.0
    return m


def random_product_state(rng: Lcg) -> np.ndarray:
    """Tensor product of two independent random single-qubit states."""
    return np.kron(random_state(rng, dim=2), random_state(rng, dim=2))


def x_zeroed_states(seed: int, want: int, max_attempts: int = 200) -> list:
    """Random states with the first marginal forced maximally mixed.

    Zeroes the x vector of random states and keeps the reconstructions that
    remain positive semidefinite. Deterministic for a fixed seed.
    """
    rng = Lcg(seed)
    states = []
    for _ in range(max_attempts):
        if len(states) >= want:
            break
        form = decompose(random_state(rng))
        matrix, valid = reconstruct(BlochForm(x=np.zeros(3), y=form.y, T=form.T))
        if valid:
            states.append(matrix)
    return states
