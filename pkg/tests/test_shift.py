"""Bilateral weighted-shift weights, identities, and matrix sections."""

import math

import numpy as np
import pytest

from hardy_annulus import (
    AnnulusGeometry,
    gram_diag,
    shift_weight,
    shift_weights,
    shifts_equivalent,
    truncated_shift_matrix,
)

# strict monotonicity is only meaningful while R^(2 alpha + 2n + 1) is
# representable above one ulp; outside this band float64 weights sit
# exactly on their limits R and 1
STRICT_BAND = range(-12, 13)


def test_weight_example(geom):
    assert shift_weight(0.0, 0, geom) == pytest.approx(math.sqrt(0.75), rel=1e-15)
    assert shift_weight(0.0, -1, geom) == pytest.approx(
        math.sqrt(1.5 / 3.0), rel=1e-15
    )


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.375, 0.5])
def test_translation_identity_bitwise(geom, alpha):
    # alpha + 1 is exact for dyadic alpha, making both sides the same
    # arithmetic path
    for n in range(-64, 65):
        assert shift_weight(alpha + 1.0, n, geom) == shift_weight(alpha, n + 1, geom)


def test_limits(geom):
    R = geom.inner_radius
    assert abs(shift_weight(0.37, 200, geom) - 1.0) < 1e-10
    assert abs(shift_weight(0.37, -200, geom) - R) < 1e-10


def test_containment_and_monotonicity(geom):
    R = geom.inner_radius
    values = shift_weights(0.37, geom, n_min=-64, n_max=64)
    assert values.min() >= R
    assert values.max() <= 1.0
    assert np.all(np.diff(values) >= 0.0)
    strict = shift_weights(0.37, geom, n_min=STRICT_BAND.start, n_max=STRICT_BAND.stop - 1)
    assert np.all(np.diff(strict) > 0.0)
    assert strict.min() > R and strict.max() < 1.0


def test_weights_are_norm_ratios(geom):
    for n in (-5, -1, 0, 3, 9):
        ratio = gram_diag(0.37, n + 1, geom) / gram_diag(0.37, n, geom)
        assert shift_weight(0.37, n, geom) == pytest.approx(math.sqrt(ratio), rel=1e-14)


def test_shifts_equivalent():
    assert shifts_equivalent(0.3, 2.3)
    assert not shifts_equivalent(0.3, 0.8)
    assert shifts_equivalent(-0.7, 0.3)


def test_truncated_section(geom):
    N = 3
    M = truncated_shift_matrix(0.0, N, geom)
    assert M.shape == (2 * N + 1, 2 * N + 1)
    window = [shift_weight(0.0, n, geom) for n in range(-N, N)]
    for i, w in enumerate(window):
        assert M[i + 1, i] == w
    assert np.count_nonzero(M) == 2 * N
    # singular values are the window weights plus one zero
    sv = np.sort(np.linalg.svd(M, compute_uv=False))
    expected = np.sort(np.array(window + [0.0]))
    assert np.allclose(sv, expected, atol=1e-14)
    assert np.linalg.norm(M, 2) == pytest.approx(max(window), rel=1e-12)
    assert max(window) < 1.0
