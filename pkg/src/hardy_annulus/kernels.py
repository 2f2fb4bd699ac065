"""Reproducing kernels on the disc and the annulus.

The weighted Hardy space H^2(mu_alpha) over A(0; R, 1) carries the
boundary measure that is arc length on |z| = 1 and R^(2*alpha) times arc
length on |z| = R.  The monomials z^n are orthogonal with

    ||z^n||^2 = 2 pi (1 + R^(2 alpha + 2n + 1)),

so the reproducing kernel is the bilateral series

    K_alpha(z, w) = (1/2 pi) sum_n (z conj(w))^n / (1 + R^(2 alpha + 2n + 1))
                  = f(-R^(2 alpha + 1), z conj(w)) / (2 pi),

with f the Jordan-Kronecker function.  The conjugate (Garabedian) kernel
satisfies z L_alpha(z, w) = K_alpha(1/z, conj(w)), giving

    L_alpha(z, w) = f(-R^(2 alpha + 1), w/z) / (2 pi z).

alpha = 0 is the unweighted Szego kernel S of the annulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergence, PoleError
from .qkernel import (
    DEFAULT_CONTROL,
    POLE_FLOOR,
    AnnulusGeometry,
    SeriesControl,
    jk_product,
    jk_series,
)

__all__ = [
    "KernelDiagDerivs",
    "szego_disc",
    "hardy_kernel",
    "garabedian_kernel",
    "szego_zero",
    "kernel_diag_derivatives",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class KernelDiagDerivs:
    """g, g', g'' at x = |w|^2, where K_alpha(w, w) = g(|w|^2)."""

    g: float
    g1: float
    g2: float


def szego_disc(z: complex, w: complex) -> complex:
    """Szego kernel of the unit disc, 1 / (2 pi (1 - z conj(w)))."""
    z = complex(z)
    w = complex(w)
    if abs(z) >= 1.0 or abs(w) >= 1.0:
        raise DomainError("szego_disc requires both points in the open unit disc")
    return 1.0 / (TWO_PI * (1.0 - z * w.conjugate()))


def _split_alpha(alpha: float) -> tuple[int, float]:
    # K_(alpha+1)(z, w) = K_alpha(z, w) / (z conj(w)): reduce alpha to [0, 1)
    # and restore the monomial prefactor exactly.  Keeps every R exponent
    # bounded for any real alpha.
    k = math.floor(alpha)
    return k, alpha - k


def hardy_kernel(
    alpha: float,
    z: complex,
    w: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> complex:
    """Weighted Hardy-space kernel K_alpha(z, w) on the annulus.

    w must lie in the closed annulus.  z may roam the meromorphic
    extension band R^2 < |z| < 1/R; the series is used when
    R^2 < |z conj(w)| < 1 and the product extension otherwise.
    """
    R = geom.inner_radius
    z = complex(z)
    w = complex(w)
    if not R * R < abs(z) < 1.0 / R:
        raise DomainError(
            f"|z| = {abs(z):.6g} outside the extension band ({R * R:.6g}, {1.0 / R:.6g})"
        )
    if not geom.in_closure(w):
        raise DomainError(f"|w| = {abs(w):.6g} outside the closed annulus [{R}, 1]")
    k, a0 = _split_alpha(alpha)
    b = -(R ** (2.0 * a0 + 1.0))
    t = z * w.conjugate()
    if R * R < abs(t) < 1.0:
        value = jk_series(b, t, geom, ctl)
    else:
        value = jk_product(b, t, geom, ctl)
    if k:
        value *= t ** (-k)
    return value / TWO_PI


def garabedian_kernel(
    alpha: float,
    z: complex,
    w: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> complex:
    """Conjugate kernel L_alpha(z, w), meromorphic with one simple pole at z = w.

    Evaluated as f(-R^(2 alpha + 1), w/z) / (2 pi z).  The residue at
    z = w is 1/(2 pi); within the open annulus no other pole occurs.
    """
    R = geom.inner_radius
    z = complex(z)
    w = complex(w)
    if z == 0:
        raise DomainError("garabedian_kernel is singular at z = 0")
    if not geom.in_closure(w):
        raise DomainError(f"|w| = {abs(w):.6g} outside the closed annulus [{R}, 1]")
    t = w / z
    if abs(t - 1.0) < POLE_FLOOR:
        raise PoleError(
            f"z within {POLE_FLOOR:g} of the kernel pole at z = w", locus="z=w"
        )
    k, a0 = _split_alpha(alpha)
    b = -(R ** (2.0 * a0 + 1.0))
    value = jk_product(b, t, geom, ctl)
    if k:
        value *= t ** (-k)
    return value / (TWO_PI * z)


def szego_zero(w: complex, geom: AnnulusGeometry) -> complex:
    """The unique zero -R/conj(w) of z -> S(z, w) in the annulus.

    The closed form is returned directly; |szego_zero(w)| = R/|w| always
    lies strictly between R and 1 for interior w.
    """
    w = complex(w)
    if not geom.is_interior(w):
        raise DomainError(f"|w| = {abs(w):.6g} is not interior to the annulus")
    return -geom.inner_radius / w.conjugate()


def kernel_diag_derivatives(
    alpha: float,
    x: float,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> KernelDiagDerivs:
    """g, g', g'' of the diagonal profile g(x) = sum_n x^n / (2 pi (1 + R^(2a+2n+1))).

    All three series are accumulated in one fused pass per tail so they
    share powers and truncation.  Negative-index terms are rewritten as

        x^(-m) c_(-m) = R^(-2a-1) (R^2/x)^m / (1 + R^(2m-2a-1)),

    which keeps every intermediate bounded.  Requires R^2 < x < 1.
    """
    R = geom.inner_radius
    if not R * R < x < 1.0:
        raise DomainError(f"x = {x!r} outside the diagonal domain ({R * R:.6g}, 1)")
    k, a0 = _split_alpha(alpha)

    # n = 0 term
    d0 = R ** (2.0 * a0 + 1.0)
    g = 1.0 / (1.0 + d0)
    g1 = 0.0
    g2 = 0.0

    def tails_below(mag: float, n: int, q: float) -> bool:
        if n < 4:
            return False
        rho = q * (1.0 + 2.0 / (n - 1))
        if rho >= 1.0:
            return False
        worst = mag * max(1.0, n * (n + 1) / (x * x))
        return worst * rho / (1.0 - rho) < ctl.tolerance

    # n > 0
    q = x
    xn = 1.0
    d = d0
    n = 0
    while True:
        n += 1
        if n > ctl.max_terms:
            raise NonConvergence(
                f"diagonal positive tail above {ctl.tolerance:g} after {ctl.max_terms} terms"
            )
        xn *= x
        d *= R * R
        tg = xn / (1.0 + d)
        g += tg
        g1 += n * tg / x
        g2 += n * (n - 1) * tg / (x * x)
        if tails_below(tg, n, q):
            break

    # n < 0
    q = R * R / x
    prefactor = R ** (-2.0 * a0 - 1.0)
    u = 1.0
    d = R ** (1.0 - 2.0 * a0)
    m = 0
    while True:
        m += 1
        if m > ctl.max_terms:
            raise NonConvergence(
                f"diagonal negative tail above {ctl.tolerance:g} after {ctl.max_terms} terms"
            )
        u *= q
        tg = prefactor * u / (1.0 + d)
        d *= R * R
        g += tg
        g1 += -m * tg / x
        g2 += m * (m + 1) * tg / (x * x)
        if tails_below(tg, m, q):
            break

    g /= TWO_PI
    g1 /= TWO_PI
    g2 /= TWO_PI

    if k:
        # G(x) = x^p g(x) with p = -k restores the requested alpha exactly.
        p = float(-k)
        xp = x**p
        G = xp * g
        G1 = xp * (p * g / x + g1)
        G2 = xp * (p * (p - 1.0) * g / (x * x) + 2.0 * p * g1 / x + g2)
        return KernelDiagDerivs(g=G, g1=G1, g2=G2)
    return KernelDiagDerivs(g=g, g1=g1, g2=g2)
