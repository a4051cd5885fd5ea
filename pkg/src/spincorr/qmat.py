"""Dense complex linear algebra for 2x2 and 4x4 operators.

Hermitian eigendecomposition, Gibbs (thermal) states, tensor products,
partial traces, Hilbert-Schmidt geometry, and the principal matrix square
root -- everything downstream modules need to manipulate two-qubit density
matrices. All operations are pure functions over immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidState,
    NonFiniteParameter,
    NonHermitianInput,
    NotPositiveSemidefinite,
)

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

HERMITICITY_TOL = 1e-10
STATE_TOL = 1e-8
PSD_CLAMP_TOL = 1e-10


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    """Return True iff ``m`` equals its conjugate transpose within ``tol``
    (Hilbert-Schmidt norm)."""
    return math.sqrt(hs_norm2(m - m.conj().T)) <= tol


def is_unit_trace(m: np.ndarray, tol: float = STATE_TOL) -> bool:
    """Return True iff tr(m) is 1 within ``tol``."""
    return abs(np.trace(m) - 1.0) <= tol


def is_psd(m: np.ndarray, tol: float = STATE_TOL) -> bool:
    """Return True iff the Hermitian part of ``m`` has no eigenvalue
    below ``-tol``."""
    evals = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    return bool(evals.min() >= -tol)


def validate_state(m: np.ndarray, tol: float = STATE_TOL) -> np.ndarray:
    """Validate a 4x4 density matrix and return it as a complex array.

    Checks hermiticity, unit trace, and positive semidefiniteness, each
    within ``tol``. Raises :class:`InvalidState` with the failed check named.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise InvalidState(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise InvalidState("matrix has non-finite entries")
    if not is_hermitian(m, tol):
        raise InvalidState("matrix is not Hermitian within tolerance")
    if not is_unit_trace(m, tol):
        raise InvalidState(f"trace is {np.trace(m).real:.6g}, expected 1")
    if not is_psd(m, tol):
        raise InvalidState("matrix has a negative eigenvalue beyond tolerance")
    return m


@dataclass(frozen=True)
class EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    ``values`` are real and sorted ascending; column k of ``vectors`` is the
    unit eigenvector of ``values[k]``. Within a degenerate cluster the
    eigenvector order is unspecified; consumers must use only spectral
    projectors or symmetric functions of the eigenvalues.
    """

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eig(m: np.ndarray) -> EigenSystem:
    """Eigendecompose a Hermitian matrix.

    The input must be Hermitian within 1e-10 (Hilbert-Schmidt norm),
    otherwise :class:`NonHermitianInput` is raised. The decomposition is
    deterministic for identical input bits.
    """
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m):
        raise NonHermitianInput("matrix is not Hermitian within 1e-10")
    values, vectors = np.linalg.eigh((m + m.conj().T) / 2.0)
    return EigenSystem(values=values, vectors=vectors)


def gibbs(h: np.ndarray, beta: float) -> np.ndarray:
    """Thermal state exp(-beta*H) / tr exp(-beta*H) of a Hermitian H.

    The minimum of beta*values is subtracted from every exponent before
    exponentiation, so the result stays finite for arbitrarily large
    couplings. ``beta`` must be finite and positive.
    """
    if not (isinstance(beta, (int, float)) and math.isfinite(beta) and beta > 0):
        raise NonFiniteParameter(f"beta must be finite and positive, got {beta!r}")
    eig = hermitian_eig(h)
    exponents = -beta * eig.values
    weights = np.exp(exponents - exponents.max())
    rho = (eig.vectors * weights) @ eig.vectors.conj().T
    rho /= weights.sum()
    return (rho + rho.conj().T) / 2.0


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor (Kronecker) product of two matrices."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(rho: np.ndarray, subsystem: str) -> np.ndarray:
    """Trace a 4x4 two-qubit operator down to one qubit.

    ``subsystem`` names the qubit to trace *out*: ``"B"`` returns the
    first qubit's 2x2 marginal, ``"A"`` the second's. Trace and hermiticity
    are preserved. Raises :class:`DimensionMismatch` for non-4x4 input.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DimensionMismatch(f"expected a 4x4 matrix, got shape {rho.shape}")
    if subsystem not in ("A", "B"):
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    r = rho.reshape(2, 2, 2, 2)
    if subsystem == "B":
        return np.trace(r, axis1=1, axis2=3)
    return np.trace(r, axis1=0, axis2=2)


def hs_norm2(a: np.ndarray) -> float:
    """Squared Hilbert-Schmidt norm tr(A^dagger A) = sum of |entries|^2."""
    a = np.asarray(a, dtype=complex)
    return float(np.vdot(a, a).real)


def mat_sqrt(m: np.ndarray) -> np.ndarray:
    """Principal square root of a positive-semidefinite Hermitian matrix.

    Eigenvalues in [-1e-10, 0) are clamped to zero (roundoff from analytic
    PSD constructions); an eigenvalue below -1e-10 raises
    :class:`NotPositiveSemidefinite`. The result is PSD Hermitian and
    squares back to the input within 1e-9.
    """
    eig = hermitian_eig(m)
    values = eig.values.copy()
    if values.min() < -PSD_CLAMP_TOL:
        raise NotPositiveSemidefinite(
            f"eigenvalue {values.min():.3e} is below the -1e-10 clamp window"
        )
    values[values < 0.0] = 0.0
    root = (eig.vectors * np.sqrt(values)) @ eig.vectors.conj().T
    return (root + root.conj().T) / 2.0
