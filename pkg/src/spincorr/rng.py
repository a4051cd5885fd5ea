"""Deterministic random generators for verification runs.

A fully specified 64-bit linear congruential generator drives every
randomized check in the toolkit, so verification streams are reproducible
bit-for-bit across platforms and implementations without depending on any
external library's generator. Definition:

- state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64
  (advance first, then output state')
- uniform on (0, 1]: ((state' >> 11) + 1) * 2^-53
- standard normals: Box-Muller on two uniforms, cosine branch returned
  first, sine branch cached for the next call
- complex standard normal: real part drawn first, then imaginary part
- random density matrix: G G^dagger / tr(G G^dagger) with G filled
  row-major from complex standard normals
"""

from __future__ import annotations

import math

import numpy as np

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator with the documented constants."""

    def __init__(self, seed: int = 1):
        self.state = seed & _MASK64
        self._spare_normal: float | None = None

    def next_u64(self) -> int:
        """Advance the state and return it as an unsigned 64-bit integer."""
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state

    def uniform(self) -> float:
        """Uniform draw on the half-open interval (0, 1]."""
        return ((self.next_u64() >> 11) + 1) * 2.0**-53

    def normal(self) -> float:
        """Standard normal draw via Box-Muller (cosine first, sine cached)."""
        if self._spare_normal is not None:
            value = self._spare_normal
            self._spare_normal = None
            return value
        u1 = self.uniform()
        u2 = self.uniform()
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        self._spare_normal = radius * math.sin(angle)
        return radius * math.cos(angle)

    def complex_normal(self) -> complex:
        """Standard complex normal: real part drawn first, then imaginary."""
        re = self.normal()
        im = self.normal()
        return complex(re, im)


def gaussian_matrix(rng: Lcg, dim: int = 4) -> np.ndarray:
    """dim x dim matrix of independent complex standard normals, row-major."""
    g = np.empty((dim, dim), dtype=complex)
    for i in range(dim):
        for j in range(dim):
            g[i, j] = rng.complex_normal()
    return g


def random_state(rng: Lcg, dim: int = 4) -> np.ndarray:
    """Random density matrix G G^dagger / tr(G G^dagger).

    Full-rank with probability one, Hermitian, unit trace, PSD.
    """
    g = gaussian_matrix(rng, dim)
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return (rho + rho.conj().T) / 2.0


def random_unitary(rng: Lcg, dim: int = 2) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition of a Gaussian
    matrix, with the R diagonal's phases absorbed so the factorization is
    unique."""
    q, r = np.linalg.qr(gaussian_matrix(rng, dim))
    phases = np.diagonal(r).copy()
    phases /= np.abs(phases)
    return q * phases
