"""Brute-force verification of the closed-form measures.

Everything here works directly on density matrices with no normalization
convention: local projective measurements are applied as explicit projector
conjugations, and the squared Hilbert-Schmidt disturbance is extremized
over measurement directions by a Fibonacci sphere scan followed by
derivative-free coordinate-descent refinement. The module also provides an
independent entanglement witness (negative partial transpose) and a
spot check that the nearest fixed-basis zero-discord state is the dephased
state, which is the reduction the discord oracle relies on.

Measurements act on the first qubit only. Grid evaluations are independent
and order-free; reductions compare by value with ties broken by the lowest
grid index, so parallel and sequential evaluation agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qmat
from .bloch import decompose
from .errors import NonUnitDirection
from .measures import X_DEGENERACY_CUTOFF
from .qmat import I2, PAULIS

_DIRECTION_TOL = 1e-9
_REFINE_INITIAL_STEP = 0.1
_REFINE_FINAL_STEP = 1e-7
_PAULI_STACK = np.stack(PAULIS)


@dataclass(frozen=True)
class SphereGrid:
    """Search grid over measurement directions on the unit sphere.

    ``directions`` holds ``n_points`` unit vectors from the Fibonacci
    lattice; ``refinement_iters`` caps the coordinate-descent sweeps run
    after the grid scan.
    """

    n_points: int
    refinement_iters: int
    directions: np.ndarray

    @classmethod
    def fibonacci(cls, n_points: int = 2000, refinement_iters: int = 500) -> "SphereGrid":
        """Fibonacci sphere lattice: z_i = 1 - (2i+1)/n, golden-angle
        azimuths phi_i = i * pi * (3 - sqrt(5))."""
        if n_points <= 0:
            raise ValueError("n_points must be positive")
        if refinement_iters < 0:
            raise ValueError("refinement_iters must be nonnegative")
        i = np.arange(n_points)
        z = 1.0 - (2.0 * i + 1.0) / n_points
        radius = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        phi = i * math.pi * (3.0 - math.sqrt(5.0))
        dirs = np.column_stack((radius * np.cos(phi), radius * np.sin(phi), z))
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        return cls(n_points=n_points, refinement_iters=refinement_iters, directions=dirs)


@dataclass(frozen=True)
class OracleResult:
    """Extremized disturbance: the value, the direction attaining it, and
    how many objective evaluations were spent. Reproducible bit-for-bit for
    identical grid and state."""

    value: float
    direction: np.ndarray
    evaluations: int


def post_measurement(rho: np.ndarray, n: np.ndarray) -> np.ndarray:
    """Apply the local projective measurement along ``n`` to the first qubit.

    The projectors are (I +/- n.sigma)/2; the state is conjugated by each
    (tensored with identity on the second qubit) and summed. Idempotent:
    applying twice equals applying once within 1e-12. Raises
    :class:`NonUnitDirection` unless |n| = 1 within 1e-9.
    """
    rho = qmat.validate_state(rho)
    n = np.asarray(n, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > _DIRECTION_TOL:
        raise NonUnitDirection(f"direction {n!r} is not a unit 3-vector")
    n_sigma = n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2]
    out = np.zeros_like(rho)
    for sign in (1.0, -1.0):
        proj = qmat.kron((I2 + sign * n_sigma) / 2.0, I2)
        out += proj @ rho @ proj
    return (out + out.conj().T) / 2.0


def _disturbance(rho: np.ndarray, n: np.ndarray) -> float:
    """Squared Hilbert-Schmidt distance between rho and its measured image."""
    n_sigma = n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2]
    out = np.zeros_like(rho)
    for sign in (1.0, -1.0):
        proj = np.kron((I2 + sign * n_sigma) / 2.0, I2)
        out += proj @ rho @ proj
    return qmat.hs_norm2(rho - out)


def _batch_disturbance(rho: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """Disturbance at every direction at once (vectorized projector algebra)."""
    n_sigma = np.einsum("nk,kij->nij", directions, _PAULI_STACK)
    measured = np.zeros((directions.shape[0], 4, 4), dtype=complex)
    for sign in (1.0, -1.0):
        p = (I2[None, :, :] + sign * n_sigma) / 2.0
        proj = np.einsum("nij,kl->nikjl", p, I2).reshape(-1, 4, 4)
        measured += proj @ rho @ proj
    diff = rho[None, :, :] - measured
    return np.einsum("nij,nij->n", diff.conj(), diff).real


def _angles_to_direction(theta: float, phi: float) -> np.ndarray:
    return np.array(
        [
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        ]
    )


def _refine(
    rho: np.ndarray,
    direction: np.ndarray,
    value: float,
    maximize: bool,
    max_sweeps: int,
) -> tuple[float, np.ndarray, int]:
    """Coordinate descent on the spherical angles of ``direction``.

    Each sweep tries +/-step on the polar and azimuthal angles, keeping
    strict improvements; the step halves when a sweep yields none, from
    0.1 rad down to 1e-7. Deterministic for identical inputs.
    """
    sign = 1.0 if maximize else -1.0
    theta = math.acos(max(-1.0, min(1.0, float(direction[2]))))
    phi = math.atan2(float(direction[1]), float(direction[0]))
    best = sign * value
    evaluations = 0
    step = _REFINE_INITIAL_STEP
    sweeps = 0
    while step >= _REFINE_FINAL_STEP and sweeps < max_sweeps:
        improved = False
        for d_theta, d_phi in ((step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)):
            candidate = _angles_to_direction(theta + d_theta, phi + d_phi)
            trial = sign * _disturbance(rho, candidate)
            evaluations += 1
            if trial > best:
                best = trial
                theta += d_theta
                phi += d_phi
                improved = True
        if not improved:
            step /= 2.0
        sweeps += 1
    return sign * best, _angles_to_direction(theta, phi), evaluations


def _extremize(rho: np.ndarray, grid: SphereGrid, maximize: bool) -> OracleResult:
    values = _batch_disturbance(rho, grid.directions)
    index = int(np.argmax(values) if maximize else np.argmin(values))
    value, direction, extra = _refine(
        rho, grid.directions[index], float(values[index]), maximize, grid.refinement_iters
    )
    return OracleResult(
        value=value, direction=direction, evaluations=grid.n_points + extra
    )


def min_oracle(rho: np.ndarray, grid: SphereGrid) -> OracleResult:
    """Maximal marginal-preserving measurement disturbance, by brute force.

    With a maximally mixed first-qubit marginal (|x| <= 1e-9, the same
    cutoff the closed form uses) every axis preserves the marginal, so the
    disturbance is maximized over the whole grid and refined. Otherwise the
    only admissible axis is x/|x| and the oracle evaluates exactly there.
    """
    rho = qmat.validate_state(rho)
    x = decompose(rho).x
    x_norm = float(np.linalg.norm(x))
    if x_norm <= X_DEGENERACY_CUTOFF:
        return _extremize(rho, grid, maximize=True)
    axis = x / x_norm
    return OracleResult(value=_disturbance(rho, axis), direction=axis, evaluations=1)


def gmod_oracle(rho: np.ndarray, grid: SphereGrid) -> OracleResult:
    """Minimal measurement disturbance over all axes, by brute force.

    The nearest zero-discord state in a fixed measurement basis is the
    dephased state (see :func:`nested_gmod_spotcheck`), so minimizing the
    disturbance over the measurement direction yields the convention-free
    geometric discord.
    """
    rho = qmat.validate_state(rho)
    return _extremize(rho, grid, maximize=False)


def nested_gmod_spotcheck(rho: np.ndarray, n: np.ndarray, k: int, seed: int = 1) -> float:
    """Randomized check that dephasing is optimal within a fixed basis.

    Draws ``k`` random zero-discord candidates p |+n><+n| (x) rho_1 +
    (1-p) |-n><-n| (x) rho_2 in the basis fixed by ``n`` and returns the
    smallest squared Hilbert-Schmidt distance to ``rho``. That minimum can
    never undercut the dephased distance by more than roundoff
    (dephasing uses the optimal weights and conditional states).
    """
    from .rng import Lcg, random_state

    rho = qmat.validate_state(rho)
    n = np.asarray(n, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > _DIRECTION_TOL:
        raise NonUnitDirection(f"direction {n!r} is not a unit 3-vector")
    if k <= 0:
        raise ValueError("k must be positive")
    n_sigma = n[0] * PAULIS[0] + n[1] * PAULIS[1] + n[2] * PAULIS[2]
    proj_plus = (I2 + n_sigma) / 2.0
    proj_minus = (I2 - n_sigma) / 2.0
    rng = Lcg(seed)
    best = math.inf
    for _ in range(k):
        p = rng.uniform()
        rho_1 = random_state(rng, dim=2)
        rho_2 = random_state(rng, dim=2)
        candidate = p * qmat.kron(proj_plus, rho_1) + (1.0 - p) * qmat.kron(
            proj_minus, rho_2
        )
        best = min(best, qmat.hs_norm2(rho - candidate))
    return best


def ppt_entangled(rho: np.ndarray) -> bool:
    """Entanglement witness: True iff the partial transpose (on the second
    qubit) has an eigenvalue below -1e-10. For two qubits this is exact:
    entangled if and only if the partial transpose is negative."""
    rho = qmat.validate_state(rho)
    pt = rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    return bool(np.linalg.eigvalsh(pt).min() < -1e-10)
