"""Kernel values against brute-force partial sums, plus identity checks."""

import cmath
import math

import numpy as np
import pytest

from hardy_annulus import (
    AnnulusGeometry,
    DomainError,
    PoleError,
    garabedian_kernel,
    hardy_kernel,
    jk_product,
    kernel_diag_derivatives,
    szego_disc,
    szego_zero,
)

TWO_PI = 2.0 * math.pi
SEED = 20260814


def coeff(alpha, n, R):
    """1/(1 + R^(2 alpha + 2n + 1)) without overflow on either side."""
    e = 2.0 * alpha + 2.0 * n + 1.0
    if e >= 0.0:
        return 1.0 / (1.0 + R**e)
    q = R**-e
    return q / (1.0 + q)


def kernel_partial_sum(alpha, z, w, R, n_lo=-200, n_hi=400):
    t = z * np.conj(w)
    return sum(t**n * coeff(alpha, n, R) for n in range(n_lo, n_hi + 1)) / TWO_PI


def diag_partial_sums(alpha, x, R, n_lo=-200, n_hi=400):
    g = g1 = g2 = 0.0
    for n in range(n_lo, n_hi + 1):
        c = coeff(alpha, n, R)
        g += c * x**n
        g1 += n * c * x ** (n - 1)
        g2 += n * (n - 1) * c * x ** (n - 2)
    return g / TWO_PI, g1 / TWO_PI, g2 / TWO_PI


def test_szego_disc_values():
    assert szego_disc(0.0, 0.0) == pytest.approx(1.0 / TWO_PI, rel=1e-15)
    assert szego_disc(0.5, 0.5) == pytest.approx(2.0 / (3.0 * math.pi), rel=1e-15)
    a, b = 0.3 + 0.4j, -0.2 + 0.1j
    assert szego_disc(a, b) == pytest.approx(np.conj(szego_disc(b, a)), rel=1e-15)
    with pytest.raises(DomainError):
        szego_disc(1.0, 0.0)
    with pytest.raises(DomainError):
        szego_disc(0.0, 1.2)


def test_hardy_matches_partial_sums(geom):
    rng = np.random.default_rng(SEED)
    for alpha in (0.0, 0.37, 1.25, -0.6):
        for _ in range(8):
            z = rng.uniform(0.55, 0.95) * cmath.exp(1j * rng.uniform(0, TWO_PI))
            w = rng.uniform(0.55, 0.95) * cmath.exp(1j * rng.uniform(0, TWO_PI))
            ours = hardy_kernel(alpha, z, w, geom)
            ref = kernel_partial_sum(alpha, z, w, 0.5)
            assert abs(ours - ref) <= 1e-12 * max(1.0, abs(ref))


def test_hardy_diagonal_example(geom):
    value = hardy_kernel(0.0, 0.7, 0.7, geom)
    ref = kernel_partial_sum(0.0, 0.7, 0.7, 0.5)
    assert value.imag == pytest.approx(0.0, abs=1e-15)
    assert value.real > 0.0
    assert abs(value - ref) <= 1e-12 * abs(ref)


def test_hardy_agrees_with_jk_product(geom):
    R = geom.inner_radius
    for alpha in (0.0, 0.37):
        b = -(R ** (2.0 * alpha + 1.0))
        for z, w in ((0.8, 0.7), (0.6 * cmath.exp(1j), 0.9)):
            t = z * np.conj(w)
            lhs = TWO_PI * hardy_kernel(alpha, z, w, geom)
            rhs = jk_product(b, t, geom)
            assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


def test_hardy_alpha_shift(geom):
    # K^(alpha+1)(z,w) = K^(alpha)(z,w) / (z conj(w))
    z, w = 0.8 * cmath.exp(0.4j), 0.7
    t = z * np.conj(w)
    for alpha in (0.0, 0.37, -0.25):
        base = hardy_kernel(alpha, z, w, geom)
        up = hardy_kernel(alpha + 1.0, z, w, geom)
        assert abs(up - base / t) <= 1e-14 * abs(base / t)


def test_hardy_hermitian(geom):
    rng = np.random.default_rng(SEED + 3)
    for _ in range(6):
        z = rng.uniform(0.55, 0.95) * cmath.exp(1j * rng.uniform(0, TWO_PI))
        w = rng.uniform(0.55, 0.95) * cmath.exp(1j * rng.uniform(0, TWO_PI))
        lhs = hardy_kernel(0.37, z, w, geom)
        rhs = np.conj(hardy_kernel(0.37, w, z, geom))
        assert abs(lhs - rhs) <= 1e-14 * max(1.0, abs(lhs))


def test_hardy_extension_band(geom):
    # z below the inner radius still works through the product path
    val = hardy_kernel(0.0, 0.3, 0.9, geom)
    assert np.isfinite(val.real)
    # quasi-periodicity ties it back to a series-domain value:
    # f(b, t/R^2) = b f(b, t), so K(z / R^2, w) = b K(z, w)
    b = -geom.inner_radius
    scaled = hardy_kernel(0.0, 0.3 / geom.inner_radius**2, 0.9, geom)
    assert abs(scaled - b * val) <= 1e-12 * abs(scaled)
    with pytest.raises(DomainError):
        hardy_kernel(0.0, 2.5, 0.9, geom)
    with pytest.raises(DomainError):
        hardy_kernel(0.0, 0.2, 0.9, geom)
    with pytest.raises(DomainError):
        hardy_kernel(0.0, 0.8, 1.2, geom)  # w must stay in the closure


def test_hardy_pole_blowup(geom):
    # the kernel section blows up as z conj(w) approaches R^2
    t = geom.inner_radius**2 * (1.0 - 1e-8)
    b = -geom.inner_radius
    assert abs(jk_product(b, t, geom)) > 1e6


def test_garabedian_residue(geom):
    w = 0.7
    for step in (1e-5, 1e-6):
        z = w + step
        val = (z - w) * garabedian_kernel(0.37, z, w, geom)
        assert abs(val - 1.0 / TWO_PI) <= 1e-3 * step / 1e-6 / TWO_PI
    with pytest.raises(PoleError):
        garabedian_kernel(0.37, w, w, geom)
    with pytest.raises(DomainError):
        garabedian_kernel(0.37, 0.0, w, geom)


@pytest.mark.parametrize("alpha", [0.0, 0.37])
def test_boundary_identity_outer(geom, alpha):
    w = 0.7
    worst = 0.0
    for k in range(64):
        z = cmath.exp(2j * math.pi * k / 64)
        k_val = hardy_kernel(alpha, z, w, geom)
        l_val = garabedian_kernel(alpha, z, w, geom)
        worst = max(worst, abs(np.conj(k_val) - z * l_val))
    assert worst < 1e-12


@pytest.mark.parametrize("alpha", [0.0, 0.37])
def test_boundary_identity_inner(geom, alpha):
    # on |z| = R the oriented inner tangent contributes a factor -R on top
    # of the weight R^(2 alpha): z L = -R^(2 alpha + 1) conj(K)
    R = geom.inner_radius
    w = 0.7
    mu = -(R ** (2.0 * alpha + 1.0))
    worst = 0.0
    for k in range(64):
        z = R * cmath.exp(2j * math.pi * k / 64)
        k_val = hardy_kernel(alpha, z, w, geom)
        l_val = garabedian_kernel(alpha, z, w, geom)
        worst = max(worst, abs(mu * np.conj(k_val) - z * l_val))
    assert worst < 1e-12


def test_szego_zero(geom):
    w = 0.7
    z0 = szego_zero(w, geom)
    assert z0 == pytest.approx(-5.0 / 7.0, rel=1e-15)
    assert abs(w) * abs(z0) == pytest.approx(geom.inner_radius, rel=1e-15)
    assert abs(hardy_kernel(0.0, z0, w, geom)) < 1e-10
    zc = 0.7 * cmath.exp(1j * math.pi / 3.0)
    assert abs(hardy_kernel(0.0, szego_zero(zc, geom), zc, geom)) < 1e-10
    with pytest.raises(DomainError):
        szego_zero(1.1, geom)


def test_diag_derivatives_match_partial_sums(geom):
    for alpha, x in ((0.0, 0.49), (0.37, 0.64), (1.25, 0.81), (-0.6, 0.36)):
        d = kernel_diag_derivatives(alpha, x, geom)
        g, g1, g2 = diag_partial_sums(alpha, x, 0.5)
        assert abs(d.g - g) <= 1e-12 * abs(g)
        assert abs(d.g1 - g1) <= 1e-12 * max(abs(g1), 1.0)
        assert abs(d.g2 - g2) <= 1e-12 * max(abs(g2), 1.0)


def test_diag_matches_kernel(geom):
    x = 0.49
    d = kernel_diag_derivatives(0.37, x, geom)
    k = hardy_kernel(0.37, math.sqrt(x), math.sqrt(x), geom)
    assert abs(d.g - k.real) <= 1e-12 * abs(k.real)


def test_diag_first_derivative_fd(geom):
    x, h = 0.6, 1e-5
    d = kernel_diag_derivatives(0.37, x, geom)
    fd = (
        kernel_diag_derivatives(0.37, x + h, geom).g
        - kernel_diag_derivatives(0.37, x - h, geom).g
    ) / (2.0 * h)
    assert abs(d.g1 - fd) <= 1e-6 * abs(fd)


def test_diag_domain(geom):
    with pytest.raises(DomainError):
        kernel_diag_derivatives(0.0, 0.2, geom)
    with pytest.raises(DomainError):
        kernel_diag_derivatives(0.0, 1.0, geom)


def test_gram_positive_definite(geom):
    points = [0.6, 0.7 * cmath.exp(1j * math.pi / 3.0), -0.8, 0.55 - 0.2j]
    M = np.array(
        [[hardy_kernel(0.37, zi, zj, geom) for zj in points] for zi in points]
    )
    eigs = np.linalg.eigvalsh((M + M.conj().T) / 2.0)
    assert eigs.min() > 0.0


def test_garabedian_pole_unique_in_annulus(geom):
    # coarse sweep: no spurious poles besides z = w
    w = 0.7
    for r in (0.55, 0.7, 0.85, 0.99):
        for k in range(12):
            z = r * cmath.exp(2j * math.pi * (k + 0.5) / 12)
            if abs(z - w) < 0.05:
                continue
            assert abs(garabedian_kernel(0.0, z, w, geom)) < 1e3
