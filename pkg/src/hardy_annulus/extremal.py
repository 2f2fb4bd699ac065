"""The constrained least-norm extremal problem and the Ahlfors map.

Over Laurent polynomials sum a_n z^n with the diagonal norm
sum d_n |a_n|^2, d_n = 2 pi (1 + R^(2 alpha + 2n + 1)), minimize the
norm subject to f(zeta) = 0 and f'(zeta) = 1.  The Gram matrix is
diagonal in the monomial basis, so the problem reduces to a 2x2 dual
solve, and the infimum has the closed form

    1 / (K_alpha(zeta, zeta) * curvature_log(zeta)).

The Ahlfors map F_zeta = S_zeta / L_zeta realizes the unweighted
extremal: |F_zeta| = 1 on both circles, F_zeta(zeta) = 0, and
F_zeta'(zeta) = 2 pi S(zeta, zeta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curvature import szego_diag
from .errors import DomainError, SingularSystem
from .kernels import TWO_PI, hardy_kernel, kernel_diag_derivatives
from .qkernel import (
    DEFAULT_CONTROL,
    AnnulusGeometry,
    SeriesControl,
    jk_product,
    jk_product_deflated,
)

__all__ = [
    "ExtremalSolution",
    "DEFAULT_TRUNCATION",
    "AHLFORS_SWITCH_RADIUS",
    "gram_diag",
    "solve_extremal",
    "ahlfors_map",
    "candidate_g",
]

# Truncation half-width; the dual residual is far below 1e-6 here for
# R in [0.3, 0.7] (it is already below 1e-9 at N = 40).
DEFAULT_TRUNCATION = 80

# Inside this distance from zeta the Ahlfors quotient switches to the
# limit form with the removable singularity cancelled analytically.
AHLFORS_SWITCH_RADIUS = 1e-6


@dataclass(frozen=True)
class ExtremalSolution:
    """Solution of the truncated least-norm problem at one (alpha, zeta)."""

    value: float
    coefficients: np.ndarray
    n_min: int
    n_max: int
    closed_form: float
    residual: float
    constraint_residuals: tuple

    def evaluate(self, z: complex) -> complex:
        """The minimizer sum a_n z^n at a point."""
        n = np.arange(self.n_min, self.n_max + 1)
        return complex(np.sum(self.coefficients * np.asarray(complex(z)) ** n))


def gram_diag(alpha: float, n: int, geom: AnnulusGeometry) -> float:
    """Squared monomial norm ||z^n||^2 = 2 pi (1 + R^(2 alpha + 2n + 1))."""
    e = 2.0 * alpha + float(2 * n + 1)
    return TWO_PI * (1.0 + geom.inner_radius**e)


def _inverse_gram_diag(alpha: float, n: np.ndarray, R: float) -> np.ndarray:
    # 1/d_n without overflow: with d = R^|e|, 1/(1+R^e) is 1/(1+d) for
    # e >= 0 and d/(1+d) for e < 0.
    e = 2.0 * alpha + (2.0 * n + 1.0)
    d = R ** np.abs(e)
    return np.where(e >= 0.0, 1.0 / (1.0 + d), d / (1.0 + d)) / TWO_PI


def solve_extremal(
    alpha: float,
    zeta: complex,
    geom: AnnulusGeometry,
    N: int = DEFAULT_TRUNCATION,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> ExtremalSolution:
    """Minimize sum d_n |a_n|^2 over the window n in [-N, N] subject to
    f(zeta) = 0, f'(zeta) = 1.

    The constraint rows are rescaled by 1/sqrt(d_n) before the 2x2 dual
    solve; the rescaled entries decay geometrically in both directions,
    so the solve stays well conditioned however close |zeta| is to R
    or 1.
    """
    zeta = complex(zeta)
    if not geom.is_interior(zeta):
        raise DomainError(f"|zeta| = {abs(zeta):.6g} is not interior to the annulus")
    if N < 2:
        raise DomainError(f"window half-width N must be at least 2, got {N!r}")
    R = geom.inner_radius
    size = 2 * N + 1
    n = np.arange(-N, N + 1, dtype=float)
    invd = _inverse_gram_diag(alpha, n, R)
    sq = np.sqrt(invd)

    # t1_n = zeta^n sqrt(1/d_n), built multiplicatively so neither factor
    # is ever formed alone; |t1_n| decays like (R/|zeta|)^|n| on the left
    # and stays bounded on the right.
    t1 = np.zeros(size, dtype=complex)
    t1[N] = sq[N]
    for i in range(N + 1, size):
        t1[i] = t1[i - 1] * zeta * (sq[i] / sq[i - 1]) if sq[i - 1] > 0.0 else 0.0
    for i in range(N - 1, -1, -1):
        t1[i] = t1[i + 1] / zeta * (sq[i] / sq[i + 1]) if sq[i + 1] > 0.0 else 0.0
    t2 = n * t1 / zeta

    m00 = float(np.sum(t1 * t1.conjugate()).real)
    m11 = float(np.sum(t2 * t2.conjugate()).real)
    m01 = complex(np.sum(t1 * t2.conjugate()))
    det = m00 * m11 - abs(m01) ** 2
    if not det > 1e-14 * m00 * m11:
        raise SingularSystem(
            f"dual 2x2 system is numerically singular (det = {det:.3g})"
        )
    mu1 = -m01 / det
    mu2 = m00 / det
    value = mu2  # = Re(conj(mu2)), the dual value; real by construction

    coefficients = sq * (t1.conjugate() * mu1 + t2.conjugate() * mu2)
    c1 = complex(np.sum((t1.conjugate() * mu1 + t2.conjugate() * mu2) * t1))
    c2 = complex(np.sum((t1.conjugate() * mu1 + t2.conjugate() * mu2) * t2))
    residuals = (abs(c1), abs(c2 - 1.0))

    x = abs(zeta) ** 2
    dd = kernel_diag_derivatives(alpha, x, geom, ctl)
    curvature = dd.g1 / dd.g + x * (dd.g2 * dd.g - dd.g1**2) / dd.g**2
    closed_form = 1.0 / (dd.g * curvature)
    residual = abs(value - closed_form) / closed_form

    return ExtremalSolution(
        value=value,
        coefficients=coefficients,
        n_min=-N,
        n_max=N,
        closed_form=closed_form,
        residual=residual,
        constraint_residuals=residuals,
    )


def ahlfors_map(
    z: complex,
    zeta: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> complex:
    """Ahlfors map F_zeta(z) = S(z, zeta) / L(z, zeta) of the annulus.

    The simple pole of L at z = zeta is removable in the quotient: within
    AHLFORS_SWITCH_RADIUS of zeta the factor (1 - zeta/z) is cancelled
    against the deflated product, so no PoleError is raised there and
    F_zeta(zeta) evaluates to exactly 0.
    """
    R = geom.inner_radius
    z = complex(z)
    zeta = complex(zeta)
    if not geom.is_interior(zeta):
        raise DomainError(f"|zeta| = {abs(zeta):.6g} is not interior to the annulus")
    if not geom.in_closure(z):
        raise DomainError(f"|z| = {abs(z):.6g} outside the closed annulus [{R}, 1]")
    b0 = -R
    numerator = jk_product(b0, z * zeta.conjugate(), geom, ctl)
    if abs(z - zeta) < AHLFORS_SWITCH_RADIUS:
        # F = z S_zeta / L_zeta = (z - zeta) f(b0, z conj(zeta)) / q(zeta/z)
        # with q(t) = (1 - t) f(b0, t) finite near t = 1.
        return (z - zeta) * numerator / jk_product_deflated(b0, zeta / z, geom, ctl)
    return z * numerator / jk_product(b0, zeta / z, geom, ctl)


def candidate_g(
    z: complex,
    alpha: float,
    zeta: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> complex:
    """The feasible function K_alpha(., zeta) F_zeta / (2 pi S(zeta,zeta) K_alpha(zeta,zeta)).

    Satisfies g(zeta) = 0 and g'(zeta) = 1 for every weight exponent; it
    attains the least-norm value exactly when alpha is extremal at zeta.
    """
    zeta = complex(zeta)
    S = szego_diag(zeta, geom, ctl)
    K_diag = hardy_kernel(alpha, zeta, zeta, geom, ctl).real
    scale = TWO_PI * S * K_diag
    return (
        hardy_kernel(alpha, z, zeta, geom, ctl)
        * ahlfors_map(z, zeta, geom, ctl)
        / scale
    )
