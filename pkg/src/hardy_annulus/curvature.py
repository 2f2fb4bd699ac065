"""Curvature of the adjoint multiplication operator from kernel data.

For a reproducing kernel K the quantity reported here is the positive
real-analytic function

    curvature_log(w) = (d^2 / dw dwbar) log K(w, w);

the operator curvature is its negation.  On the annulus the diagonal is
radial, K(w, w) = g(|w|^2), so with x = |w|^2

    curvature_log = g'/g + x (g'' g - g'^2) / g^2.

The Szego comparison bound is 4 pi^2 S(w, w)^2; on the disc the two
sides agree identically, on the annulus equality at a point forces the
extremal weight class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, NonConvergence
from .kernels import hardy_kernel, kernel_diag_derivatives
from .qkernel import DEFAULT_CONTROL, AnnulusGeometry, SeriesControl

__all__ = [
    "CurvatureReport",
    "RationalFunction",
    "EXTREMALITY_TOL",
    "curvature_log_disc",
    "curvature_log_annulus",
    "curvature_bound",
    "szego_diag",
    "curvature_report",
    "curvature_fd",
    "gap_alpha_scan",
    "localized_model",
]

# Absolute tolerance on the gap below which a weight class is declared
# extremal; series roundoff sits several orders below this.
EXTREMALITY_TOL = 1e-8


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature, Szego bound, their gap, and the extremality verdict at a point."""

    curvature_log: float
    bound: float
    gap: float
    extremal: bool


@dataclass(frozen=True)
class RationalFunction:
    """A rational function given by ascending-power coefficient lists.

    Poles must avoid every point where the function or the localized
    model is evaluated.
    """

    numerator: tuple
    denominator: tuple = (1.0,)

    def __post_init__(self):
        if not any(c != 0 for c in self.denominator):
            raise DomainError("denominator is identically zero")

    def __call__(self, z: complex) -> complex:
        num = _polyval(self.numerator, z)
        den = _polyval(self.denominator, z)
        if abs(den) < 1e-300:
            raise DomainError(f"rational function has a pole at z = {z:.6g}")
        return num / den

    def derivative(self, z: complex) -> complex:
        """r'(z) by the quotient rule."""
        num = _polyval(self.numerator, z)
        den = _polyval(self.denominator, z)
        if abs(den) < 1e-300:
            raise DomainError(f"rational function has a pole at z = {z:.6g}")
        dnum = _polyval(_derivative_coeffs(self.numerator), z)
        dden = _polyval(_derivative_coeffs(self.denominator), z)
        return (dnum * den - num * dden) / (den * den)


def _polyval(coeffs: Sequence[complex], z: complex) -> complex:
    result = complex(0.0)
    for c in reversed(tuple(coeffs)):
        result = result * z + c
    return result


def _derivative_coeffs(coeffs: Sequence[complex]) -> tuple:
    return tuple(k * c for k, c in enumerate(coeffs))[1:] or (0.0,)


def curvature_log_disc(w: complex) -> float:
    """Disc curvature 1 / (1 - |w|^2)^2."""
    w = complex(w)
    if abs(w) >= 1.0:
        raise DomainError("curvature_log_disc requires |w| < 1")
    return 1.0 / (1.0 - abs(w) ** 2) ** 2


def curvature_bound(S_diag: float) -> float:
    """Szego comparison bound 4 pi^2 S(w, w)^2."""
    if not S_diag > 0.0:
        raise DomainError(f"kernel diagonal must be positive, got {S_diag!r}")
    return 4.0 * math.pi**2 * S_diag**2


def szego_diag(
    zeta: complex, geom: AnnulusGeometry, ctl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Unweighted Szego diagonal S(zeta, zeta) of the annulus, real and positive."""
    return hardy_kernel(0.0, zeta, zeta, geom, ctl).real


def curvature_log_annulus(
    alpha: float,
    zeta: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> float:
    """Curvature of the weight-alpha kernel at an interior point."""
    zeta = complex(zeta)
    if not geom.is_interior(zeta):
        raise DomainError(f"|zeta| = {abs(zeta):.6g} is not interior to the annulus")
    x = abs(zeta) ** 2
    dd = kernel_diag_derivatives(alpha, x, geom, ctl)
    return dd.g1 / dd.g + x * (dd.g2 * dd.g - dd.g1**2) / dd.g**2


def curvature_report(
    alpha: float,
    zeta: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
    tol: float = EXTREMALITY_TOL,
) -> CurvatureReport:
    """Assemble curvature, bound, gap, and the extremality verdict at zeta."""
    curvature = curvature_log_annulus(alpha, zeta, geom, ctl)
    bound = curvature_bound(szego_diag(zeta, geom, ctl))
    gap = curvature - bound
    return CurvatureReport(
        curvature_log=curvature, bound=bound, gap=gap, extremal=abs(gap) <= tol
    )


def curvature_fd(
    kernel_diag: Callable[[complex], float],
    w: complex,
    h: float | None = None,
    geom: AnnulusGeometry | None = None,
) -> float:
    """Finite-difference curvature: one quarter of the 5-point Laplacian of log K(w, w).

    ``kernel_diag`` maps a point to the (real) kernel diagonal there.
    The default step is 1e-4 |w|.  When a geometry is supplied, every
    stencil point must stay inside the open annulus.
    """
    w = complex(w)
    if h is None:
        h = 1e-4 * abs(w)
    if not h > 0.0:
        raise DomainError(f"step h must be positive, got {h!r}")
    stencil = (w + h, w - h, w + 1j * h, w - 1j * h)
    if geom is not None:
        for p in (w, *stencil):
            if not geom.is_interior(p):
                raise DomainError(
                    f"finite-difference stencil leaves the annulus at |z| = {abs(p):.6g}"
                )
    def log_diag(p: complex) -> float:
        value = complex(kernel_diag(p)).real
        if not value > 0.0:
            raise DomainError(f"kernel diagonal must be positive, got {value!r} at {p:.6g}")
        return math.log(value)

    ring = sum(log_diag(p) for p in stencil)
    return (ring - 4.0 * log_diag(w)) / (4.0 * h * h)


def gap_alpha_scan(
    alphas: Sequence[float],
    zeta: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> np.ndarray:
    """Curvature gap at zeta for a whole array of weight exponents at once.

    Vectorizes the diagonal series over alpha (the gap is 1-periodic in
    alpha, so exponents are reduced mod 1 first).  Useful for uniqueness
    scans where thousands of alphas are probed at one point.
    """
    zeta = complex(zeta)
    if not geom.is_interior(zeta):
        raise DomainError(f"|zeta| = {abs(zeta):.6g} is not interior to the annulus")
    R = geom.inner_radius
    x = abs(zeta) ** 2
    a = np.mod(np.asarray(alphas, dtype=float), 1.0)

    d0 = R ** (2.0 * a + 1.0)
    g = 1.0 / (1.0 + d0)
    g1 = np.zeros_like(g)
    g2 = np.zeros_like(g)

    # n > 0
    xn = 1.0
    d = d0.copy()
    for n in range(1, ctl.max_terms + 1):
        xn *= x
        d *= R * R
        tg = xn / (1.0 + d)
        g += tg
        g1 += n * tg / x
        g2 += n * (n - 1) * tg / (x * x)
        if n >= 4 and xn * (n * (n + 1) / (x * x)) * x / (1.0 - x) < ctl.tolerance:
            break
    else:
        raise NonConvergence("alpha-scan positive tail did not settle")

    # n < 0, same stable rewrite as the scalar path
    q = R * R / x
    prefactor = R ** (-2.0 * a - 1.0)
    u = 1.0
    d = R ** (1.0 - 2.0 * a)
    for m in range(1, ctl.max_terms + 1):
        u *= q
        tg = prefactor * u / (1.0 + d)
        d *= R * R
        g += tg
        g1 += -m * tg / x
        g2 += m * (m + 1) * tg / (x * x)
        if m >= 4 and np.max(prefactor) * u * (m * (m + 1) / (x * x)) * q / (1.0 - q) < ctl.tolerance:
            break
    else:
        raise NonConvergence("alpha-scan negative tail did not settle")

    twopi = 2.0 * math.pi
    g /= twopi
    g1 /= twopi
    g2 /= twopi
    curv = g1 / g + x * (g2 * g - g1**2) / g**2
    bound = curvature_bound(szego_diag(zeta, geom, ctl))
    return curv - bound


def localized_model(
    r: RationalFunction, w: complex, curvature_log: float
) -> np.ndarray:
    """2x2 localization [[r(w), r'(w)/sqrt(curvature_log)], [0, r(w)]]."""
    if not curvature_log > 0.0:
        raise DomainError(f"curvature_log must be positive, got {curvature_log!r}")
    w = complex(w)
    value = r(w)
    corner = r.derivative(w) / math.sqrt(curvature_log)
    return np.array([[value, corner], [0.0, value]], dtype=complex)
