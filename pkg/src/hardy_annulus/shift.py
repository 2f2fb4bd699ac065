"""Bilateral weighted-shift realization of the bundle shift.

Multiplication by z on H^2(mu_alpha) acts on the normalized monomial
basis as a bilateral weighted shift with weight sequence

    omega_n = sqrt((1 + R^(2 alpha + 2n + 3)) / (1 + R^(2 alpha + 2n + 1))),

strictly increasing from R (n -> -inf) to 1 (n -> +inf).  Two shifts are
unitarily equivalent iff their exponents differ by an integer, which at
the weight level is the translation identity omega^(alpha+1)_n =
omega^(alpha)_(n+1).
"""

from __future__ import annotations

import math

import numpy as np

from .characters import mod1
from .errors import DomainError
from .qkernel import AnnulusGeometry

__all__ = [
    "shift_weight",
    "shift_weights",
    "shifts_equivalent",
    "truncated_shift_matrix",
    "DEFAULT_WINDOW",
]

# Weights sit within 1e-10 of their limits well inside this window for
# R <= 0.7.
DEFAULT_WINDOW = (-64, 64)


def shift_weight(alpha: float, n: int, geom: AnnulusGeometry) -> float:
    """The n-th shift weight omega_n for weight exponent alpha.

    The exponent 2 alpha + 2n + 1 is formed with a single rounding
    (exact doubling plus an exact integer), so the translation identity
    omega^(alpha+1)_n = omega^(alpha)_(n+1) holds bitwise whenever
    alpha + 1 is itself exact.  Negative exponents are rescaled by
    R^(-e) before the square root, so no intermediate can overflow.
    """
    R = geom.inner_radius
    e = 2.0 * alpha + float(2 * n + 1)
    if e >= 0.0:
        return math.sqrt((1.0 + R ** (e + 2.0)) / (1.0 + R**e))
    s = R**-e
    return math.sqrt((s + R * R) / (s + 1.0))


def shift_weights(
    alpha: float,
    geom: AnnulusGeometry,
    n_min: int = DEFAULT_WINDOW[0],
    n_max: int = DEFAULT_WINDOW[1],
) -> np.ndarray:
    """Weight window [omega_(n_min), ..., omega_(n_max)] as an array."""
    if n_min > n_max:
        raise DomainError(f"empty window [{n_min}, {n_max}]")
    return np.array([shift_weight(alpha, n, geom) for n in range(n_min, n_max + 1)])


def shifts_equivalent(alpha: float, beta: float) -> bool:
    """True iff alpha - beta is an integer (unitarily equivalent shifts)."""
    return mod1(float(alpha) - float(beta)) == 0.0


def truncated_shift_matrix(alpha: float, N: int, geom: AnnulusGeometry) -> np.ndarray:
    """Finite section of the shift on basis e_(-N) ... e_N.

    The (2N+1) x (2N+1) matrix has omega_n in position (row, column) =
    (n + 1, n) relative to that basis and zeros elsewhere; its singular
    values are the window weights together with 0.
    """
    if N < 1:
        raise DomainError(f"N must be at least 1, got {N!r}")
    size = 2 * N + 1
    section = np.zeros((size, size))
    for n in range(-N, N):
        section[n + 1 + N, n + N] = shift_weight(alpha, n, geom)
    return section
