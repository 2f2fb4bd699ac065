"""Jordan-Kronecker function on the annulus A(0; R, 1).

The central object is the bilateral q-series

    f(b, t) = sum_{n in Z} t^n / (1 - b R^(2n)),

convergent for R^2 < |t| < 1 and b off {0} union {R^(2k) : k in Z}.
Its Ramanujan product form

    f(b, t) = P(bt) P(R^2/(bt)) P(R^2)^2 / (P(t) P(R^2/t) P(b) P(R^2/b)),

with P(x) = prod_{j >= 0} (1 - x R^(2j)), extends f meromorphically to
all (b, t) off the pole loci b = R^(2k), t = R^(2k).  Every kernel in
this package is a rescaled specialization of f.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergence, PoleError

__all__ = [
    "AnnulusGeometry",
    "SeriesControl",
    "DEFAULT_CONTROL",
    "POLE_FLOOR",
    "jk_series",
    "jk_product",
    "jk_product_deflated",
    "jk_zero_locus",
]

# Denominator factors smaller than this are treated as genuine poles
# rather than precision loss.
POLE_FLOOR = 1e-12


@dataclass(frozen=True)
class AnnulusGeometry:
    """The annulus A(0; R, 1) = {z : R < |z| < 1}, fixed by its inner radius."""

    inner_radius: float

    def __post_init__(self):
        if not 0.0 < self.inner_radius < 1.0:
            raise DomainError(
                f"inner radius must satisfy 0 < R < 1, got {self.inner_radius!r}"
            )

    def is_interior(self, z: complex) -> bool:
        return self.inner_radius < abs(z) < 1.0

    def in_closure(self, z: complex, rtol: float = 1e-12) -> bool:
        # Slack absorbs the rounding of points constructed on the circles.
        r = abs(z)
        return self.inner_radius * (1.0 - rtol) <= r <= 1.0 + rtol


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for every bilateral series and infinite product."""

    tolerance: float = 1e-14
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.tolerance > 0.0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance!r}")
        if self.max_terms < 8:
            raise DomainError(f"max_terms must be at least 8, got {self.max_terms!r}")


DEFAULT_CONTROL = SeriesControl()


def _nearest_pole(value: complex, R: float, floor: float) -> complex | None:
    """Nearest point of {R^(2k) : k in Z} within ``floor`` of ``value``, if any."""
    r = abs(value)
    if r == 0.0:
        return None
    k = round(math.log(r) / (2.0 * math.log(R)))
    if abs(k) > 2000:
        return None
    pole = R ** (2 * k)
    if abs(value - pole) <= floor * max(1.0, pole):
        return complex(pole)
    return None


def jk_series(
    b: complex,
    t: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
) -> complex:
    """Evaluate f(b, t) by its bilateral series.

    Terms are summed symmetrically outward from n = 0.  Each tail decays
    geometrically (ratio |t| for n -> +inf, R^2/|t| for n -> -inf) and is
    cut off once its geometric bound drops below ``ctl.tolerance``.  The
    cutoff is armed only after the denominators have passed their closest
    approach to zero, so a b near the pole locus cannot hide a late spike.

    Raises DomainError if |t| is outside (R^2, 1), b = 0, or b lies on the
    pole locus; NonConvergence if either tail needs more than
    ``ctl.max_terms`` terms.
    """
    R = geom.inner_radius
    b = complex(b)
    t = complex(t)
    if not R * R < abs(t) < 1.0:
        raise DomainError(
            f"|t| = {abs(t):.6g} outside the series annulus ({R * R:.6g}, 1)"
        )
    if b == 0:
        raise DomainError("b = 0: the n -> -inf tail of the bilateral series diverges")
    pole = _nearest_pole(b, R, POLE_FLOOR)
    if pole is not None:
        raise DomainError(f"b = {b:.6g} lies on the pole locus R^(2k), near {pole:.6g}")

    total = 1.0 / (1.0 - b)
    abs_b = abs(b)

    # n > 0: t^n / (1 - b R^(2n)).
    q = abs(t)
    tail_gain = 2.0 * q / (1.0 - q)
    tn = complex(1.0)
    n = 0
    while True:
        n += 1
        if n > ctl.max_terms:
            raise NonConvergence(
                f"positive tail above {ctl.tolerance:g} after {ctl.max_terms} terms"
            )
        tn *= t
        term = tn / (1.0 - b * R ** (2 * n))
        total += term
        if n >= 3 and abs_b * R ** (2 * n) < 0.5 and abs(term) * tail_gain < ctl.tolerance:
            break

    # n < 0: with m = -n, the term t^(-m)/(1 - b R^(-2m)) is rewritten as
    # -(R^2/t)^m / (b - R^(2m)) to avoid the overflowing factor R^(-2m).
    u = complex(1.0)
    ratio = R * R / t
    qr = abs(ratio)
    tail_gain = 2.0 * qr / (1.0 - qr)
    m = 0
    while True:
        m += 1
        if m > ctl.max_terms:
            raise NonConvergence(
                f"negative tail above {ctl.tolerance:g} after {ctl.max_terms} terms"
            )
        u *= ratio
        term = -u / (b - R ** (2 * m))
        total += term
        if m >= 3 and R ** (2 * m) < 0.5 * abs_b and abs(term) * tail_gain < ctl.tolerance:
            break

    return total


def _qproduct(
    x: complex,
    R: float,
    ctl: SeriesControl,
    pole_floor: float = 0.0,
    locus: str | None = None,
) -> complex:
    """P(x) = prod_{j >= 0} (1 - x R^(2j)).

    The factors approach 1 geometrically at rate R^2; the product stops
    once |x R^(2j)| has stayed below tolerance for four consecutive j.
    When ``locus`` is given the factors are pole-checked against
    ``pole_floor`` and a violation raises PoleError naming that locus.
    """
    p = complex(1.0)
    y = complex(x)
    settled = 0
    for _ in range(ctl.max_terms):
        factor = 1.0 - y
        if locus is not None and abs(factor) < pole_floor:
            raise PoleError(
                f"denominator factor |1 - x R^(2j)| = {abs(factor):.3g} below "
                f"pole floor {pole_floor:g} ({locus}-pole)",
                locus=locus,
            )
        p *= factor
        y *= R * R
        settled = settled + 1 if abs(y) < ctl.tolerance else 0
        if settled >= 4:
            return p
    raise NonConvergence(
        f"product factors not settled within {ctl.max_terms} terms"
    )


def jk_product(
    b: complex,
    t: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
    pole_floor: float = POLE_FLOOR,
) -> complex:
    """Evaluate f(b, t) by the Ramanujan product identity.

    Valid for all (b, t) off the pole loci, not just the series annulus;
    this is the meromorphic extension used by the kernel evaluators.

    Raises PoleError naming the offending locus ("b" or "t") when a
    denominator factor has modulus below ``pole_floor``.
    """
    R = geom.inner_radius
    b = complex(b)
    t = complex(t)
    if b == 0 or t == 0:
        raise DomainError("b and t must be nonzero")
    bt = b * t
    num = (
        _qproduct(bt, R, ctl)
        * _qproduct(R * R / bt, R, ctl)
        * _qproduct(R * R, R, ctl) ** 2
    )
    den = (
        _qproduct(t, R, ctl, pole_floor, "t")
        * _qproduct(R * R / t, R, ctl, pole_floor, "t")
        * _qproduct(b, R, ctl, pole_floor, "b")
        * _qproduct(R * R / b, R, ctl, pole_floor, "b")
    )
    return num / den


def jk_product_deflated(
    b: complex,
    t: complex,
    geom: AnnulusGeometry,
    ctl: SeriesControl = DEFAULT_CONTROL,
    pole_floor: float = POLE_FLOOR,
) -> complex:
    """Evaluate (1 - t) * f(b, t) with the simple pole at t = 1 removed.

    The j = 0 factor of P(t) is cancelled analytically, so the result is
    finite and accurate arbitrarily close to t = 1 (it tends to 1 there).
    Used for the removable singularity of the Ahlfors map.
    """
    R = geom.inner_radius
    b = complex(b)
    t = complex(t)
    if b == 0 or t == 0:
        raise DomainError("b and t must be nonzero")
    bt = b * t
    num = (
        _qproduct(bt, R, ctl)
        * _qproduct(R * R / bt, R, ctl)
        * _qproduct(R * R, R, ctl) ** 2
    )
    # P(t) / (1 - t) = prod_{j >= 1} (1 - t R^(2j)) = P(t R^2)
    den = (
        _qproduct(t * R * R, R, ctl, pole_floor, "t")
        * _qproduct(R * R / t, R, ctl, pole_floor, "t")
        * _qproduct(b, R, ctl, pole_floor, "b")
        * _qproduct(R * R / b, R, ctl, pole_floor, "b")
    )
    return num / den


def jk_zero_locus(b: complex, geom: AnnulusGeometry, j_max: int) -> list[complex]:
    """Predicted zeros of t -> f(b, t): bt = R^(-2j) or bt = R^(2j+2), j <= j_max."""
    if b == 0:
        raise DomainError("b = 0 has no zero locus")
    if j_max < 0:
        raise DomainError(f"j_max must be nonnegative, got {j_max!r}")
    R = geom.inner_radius
    b = complex(b)
    outward = [R ** (-2 * j) / b for j in range(j_max + 1)]
    inward = [R ** (2 * j + 2) / b for j in range(j_max + 1)]
    return outward + inward
