"""Harmonic measures and bundle-shift character arithmetic.

A bundle shift over an n+1 connected domain is classified by a character,
represented here additively as an n-tuple of reals mod 1 (n = 1 for the
annulus, whose harmonic measure of the inner circle is
omega_1(z) = log|z| / log R).  The extremal character at an interior
point zeta is phi(zeta) = 1 - omega_1(zeta) mod 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .kernels import szego_zero
from .qkernel import AnnulusGeometry

__all__ = [
    "CharacterIndex",
    "mod1",
    "harmonic_measure",
    "extremal_alpha",
    "phi_char",
    "char_range_check",
    "chars_equivalent",
    "blaschke_index",
    "szego_zero_invariance",
]

_SNAP = 1e-12


def mod1(x: float) -> float:
    """Reduce into [0, 1), snapping values within 1e-12 of an integer to 0.

    The snap uses round-half-even and keeps equivalence tests exact in the
    presence of 0.999999999999... artifacts.
    """
    nearest = round(x)
    if abs(x - nearest) <= _SNAP:
        return 0.0
    r = x - math.floor(x)
    return r if r < 1.0 else 0.0


@dataclass(frozen=True)
class CharacterIndex:
    """An n-tuple of reals mod 1 naming a bundle-shift equivalence class."""

    components: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "components", tuple(mod1(float(c)) for c in self.components)
        )
        if not self.components:
            raise DomainError("a character needs at least one component")

    def __len__(self) -> int:
        return len(self.components)

    def total(self) -> float:
        return sum(self.components)

    def as_unimodular(self) -> tuple:
        """Multiplicative form exp(2 pi i x) of each component, for display."""
        return tuple(cmath.exp(2j * math.pi * c) for c in self.components)


def harmonic_measure(z: complex, geom: AnnulusGeometry) -> float:
    """Harmonic measure omega_1(z) = log|z| / log R of the inner circle."""
    z = complex(z)
    if not geom.is_interior(z):
        raise DomainError(f"|z| = {abs(z):.6g} is not interior to the annulus")
    return math.log(abs(z)) / math.log(geom.inner_radius)


def extremal_alpha(zeta: complex, geom: AnnulusGeometry) -> float:
    """The unique weight exponent in [0, 1) whose shift is extremal at zeta."""
    return mod1(1.0 - harmonic_measure(zeta, geom))


def phi_char(omegas: Iterable[float]) -> CharacterIndex:
    """The induced character (1 - omega_1, ..., 1 - omega_n) mod 1."""
    values = tuple(float(w) for w in omegas)
    for w in values:
        if not 0.0 < w < 1.0:
            raise DomainError(f"harmonic measure {w!r} outside (0, 1)")
    return CharacterIndex(tuple(1.0 - w for w in values))


def char_range_check(index: CharacterIndex) -> bool:
    """True iff the component sum lies in (n - 1, n), the range of phi."""
    n = len(index)
    return (n - 1) < index.total() < n


def chars_equivalent(a: float, b: float) -> bool:
    """True iff a - b is an integer (same character class)."""
    return mod1(float(a) - float(b)) == 0.0


def blaschke_index(points: Sequence[complex], geom: AnnulusGeometry) -> CharacterIndex:
    """Index (-sum_k omega_1(a_k)) mod 1 of the Blaschke factor with the given zeros."""
    if not points:
        raise DomainError("blaschke_index needs at least one zero")
    total = sum(harmonic_measure(a, geom) for a in points)
    return CharacterIndex((mod1(-total),))


def szego_zero_invariance(zeta: complex, geom: AnnulusGeometry) -> float:
    """omega_1(zeta) + omega_1(szego_zero(zeta)); equals 1 on the annulus."""
    return harmonic_measure(zeta, geom) + harmonic_measure(szego_zero(zeta, geom), geom)
