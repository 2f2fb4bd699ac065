"""Command handlers shared by the HTTP service and the local CLI path.

Each handler takes a validated request model and returns the matching
response envelope.  Domain and convergence errors propagate as the
package exceptions; transport layers translate them to status codes.
"""

from __future__ import annotations

import math

import numpy as np

from ..characters import char_range_check, extremal_alpha, harmonic_measure, phi_char
from ..curvature import curvature_report
from ..extremal import ahlfors_map, solve_extremal
from ..kernels import garabedian_kernel, hardy_kernel, szego_zero
from ..qkernel import AnnulusGeometry, SeriesControl, jk_product, jk_series
from ..shift import shift_weights
from . import schemas as sc

_FPRIME_STEP = 1e-5


def _geometry(req) -> AnnulusGeometry:
    return AnnulusGeometry(req.R)


def _control(req) -> SeriesControl:
    return SeriesControl(tolerance=req.tol, max_terms=req.max_terms)


def run_jk(req: sc.JkRequest) -> sc.JkResponse:
    geom, ctl = _geometry(req), _control(req)
    b, t = req.b.to_complex(), req.t.to_complex()
    series = product = None
    if req.method in ("series", "both"):
        series = jk_series(b, t, geom, ctl)
    if req.method in ("product", "both"):
        product = jk_product(b, t, geom, ctl)
    difference = abs(series - product) if req.method == "both" else None
    out = sc.JkOutputs(
        series=None if series is None else sc.ComplexValue.from_complex(series),
        product=None if product is None else sc.ComplexValue.from_complex(product),
        difference=difference,
    )
    return sc.JkResponse(inputs=req, outputs=out)


def run_kernel(req: sc.KernelRequest) -> sc.KernelResponse:
    value = hardy_kernel(
        req.alpha, req.z.to_complex(), req.w.to_complex(), _geometry(req), _control(req)
    )
    out = sc.KernelOutputs(value=sc.ComplexValue.from_complex(value))
    return sc.KernelResponse(inputs=req, outputs=out)


def run_garabedian(req: sc.KernelRequest) -> sc.GarabedianResponse:
    value = garabedian_kernel(
        req.alpha, req.z.to_complex(), req.w.to_complex(), _geometry(req), _control(req)
    )
    out = sc.KernelOutputs(value=sc.ComplexValue.from_complex(value))
    return sc.GarabedianResponse(inputs=req, outputs=out)


def _curvature_outputs(alpha, zeta, geom, ctl, tol) -> sc.CurvatureOutputs:
    rep = curvature_report(alpha, zeta, geom, ctl, tol=tol)
    return sc.CurvatureOutputs(
        curvature_log=rep.curvature_log,
        bound=rep.bound,
        gap=rep.gap,
        extremal=rep.extremal,
    )


def run_curvature(req: sc.CurvatureRequest) -> sc.CurvatureResponse:
    out = _curvature_outputs(
        req.alpha, req.zeta.to_complex(), _geometry(req), _control(req), req.extremality_tol
    )
    return sc.CurvatureResponse(inputs=req, outputs=out)


def run_curvature_grid(req: sc.CurvatureGridRequest) -> sc.CurvatureGridResponse:
    geom, ctl = _geometry(req), _control(req)
    radii = np.linspace(req.rmin, req.rmax, req.n)
    rows = []
    for r in radii:
        rep = curvature_report(req.alpha, complex(r, 0.0), geom, ctl, tol=req.extremality_tol)
        rows.append(
            sc.CurvatureGridRow(
                r=float(r), curvature_log=rep.curvature_log, bound=rep.bound, gap=rep.gap
            )
        )
    return sc.CurvatureGridResponse(inputs=req, outputs=sc.CurvatureGridOutputs(rows=rows))


def run_extremal_alpha(req: sc.ExtremalAlphaRequest) -> sc.ExtremalAlphaResponse:
    geom = AnnulusGeometry(req.R)
    zeta = req.zeta.to_complex()
    out = sc.ExtremalAlphaOutputs(
        alpha=extremal_alpha(zeta, geom),
        harmonic_measure=harmonic_measure(zeta, geom),
    )
    return sc.ExtremalAlphaResponse(inputs=req, outputs=out)


def run_extremal_check(req: sc.ExtremalCheckRequest) -> sc.ExtremalCheckResponse:
    geom, ctl = _geometry(req), _control(req)
    zeta = req.zeta.to_complex()
    alpha_star = extremal_alpha(zeta, geom)
    alpha = alpha_star if req.alpha is None else req.alpha
    rep = curvature_report(alpha, zeta, geom, ctl, tol=req.extremality_tol)
    z0 = szego_zero(zeta, geom)
    gar = abs(garabedian_kernel(alpha, z0, zeta, geom, ctl))
    a0 = alpha % 1.0
    b = -(geom.inner_radius ** (2.0 * a0 + 1.0))
    t0 = -(abs(zeta) ** 2) / geom.inner_radius
    jk_criterion = abs(jk_product(b, t0, geom, ctl))
    out = sc.ExtremalCheckOutputs(
        alpha=alpha,
        alpha_star=alpha_star,
        curvature_log=rep.curvature_log,
        bound=rep.bound,
        gap=rep.gap,
        extremal=rep.extremal,
        garabedian_at_szego_zero=gar,
        jk_criterion=jk_criterion,
    )
    return sc.ExtremalCheckResponse(inputs=req, outputs=out)


def run_phi(req: sc.PhiRequest) -> sc.PhiResponse:
    if req.omegas is not None:
        omegas = list(req.omegas)
    else:
        geom = AnnulusGeometry(req.R)
        omegas = [harmonic_measure(req.zeta.to_complex(), geom)]
    char = phi_char(omegas)
    out = sc.PhiOutputs(
        components=list(char.components),
        total=char.total(),
        in_range=char_range_check(char),
    )
    return sc.PhiResponse(inputs=req, outputs=out)


def run_weights(req: sc.WeightsRequest) -> sc.WeightsResponse:
    geom = AnnulusGeometry(req.R)
    values = shift_weights(req.alpha, geom, n_min=req.n_min, n_max=req.n_max)
    rows = [
        sc.WeightRow(n=n, weight=float(wn))
        for n, wn in zip(range(req.n_min, req.n_max + 1), values)
    ]
    return sc.WeightsResponse(inputs=req, outputs=sc.WeightsOutputs(rows=rows))


def run_solve_extremal(req: sc.SolveExtremalRequest) -> sc.SolveExtremalResponse:
    geom, ctl = _geometry(req), _control(req)
    sol = solve_extremal(req.alpha, req.zeta.to_complex(), geom, N=req.N, ctl=ctl)
    coeffs = None
    if req.include_coefficients:
        coeffs = [sc.ComplexValue.from_complex(complex(c)) for c in sol.coefficients]
    out = sc.SolveExtremalOutputs(
        value=sol.value,
        closed_form=sol.closed_form,
        residual=sol.residual,
        constraint_residuals=list(sol.constraint_residuals),
        N=req.N,
        coefficients=coeffs,
    )
    return sc.SolveExtremalResponse(inputs=req, outputs=out)


def run_ahlfors_check(req: sc.AhlforsCheckRequest) -> sc.AhlforsCheckResponse:
    geom, ctl = _geometry(req), _control(req)
    zeta = req.zeta.to_complex()
    R = geom.inner_radius
    dev_outer = 0.0
    dev_inner = 0.0
    for k in range(req.samples):
        u = complex(math.cos(2.0 * math.pi * k / req.samples),
                    math.sin(2.0 * math.pi * k / req.samples))
        dev_outer = max(dev_outer, abs(abs(ahlfors_map(u, zeta, geom, ctl)) - 1.0))
        dev_inner = max(dev_inner, abs(abs(ahlfors_map(R * u, zeta, geom, ctl)) - 1.0))
    f_at_zeta = abs(ahlfors_map(zeta, zeta, geom, ctl))
    h = _FPRIME_STEP
    fprime = (ahlfors_map(zeta + h, zeta, geom, ctl)
              - ahlfors_map(zeta - h, zeta, geom, ctl)) / (2.0 * h)
    target = 2.0 * math.pi * hardy_kernel(0.0, zeta, zeta, geom, ctl).real
    out = sc.AhlforsCheckOutputs(
        max_deviation_outer=dev_outer,
        max_deviation_inner=dev_inner,
        f_at_zeta=f_at_zeta,
        fprime_deviation=abs(fprime - target),
        samples=req.samples,
    )
    return sc.AhlforsCheckResponse(inputs=req, outputs=out)


HANDLERS = {
    "jk": (sc.JkRequest, run_jk),
    "kernel": (sc.KernelRequest, run_kernel),
    "garabedian": (sc.KernelRequest, run_garabedian),
    "curvature": (sc.CurvatureRequest, run_curvature),
    "curvature-grid": (sc.CurvatureGridRequest, run_curvature_grid),
    "extremal-alpha": (sc.ExtremalAlphaRequest, run_extremal_alpha),
    "extremal-check": (sc.ExtremalCheckRequest, run_extremal_check),
    "phi": (sc.PhiRequest, run_phi),
    "weights": (sc.WeightsRequest, run_weights),
    "solve-extremal": (sc.SolveExtremalRequest, run_solve_extremal),
    "ahlfors-check": (sc.AhlforsCheckRequest, run_ahlfors_check),
}
