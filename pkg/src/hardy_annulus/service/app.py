"""FastAPI application exposing the kernel computations over HTTP.

Run locally with::

    uvicorn hardy_annulus.service.app:app

Domain violations map to 422, convergence and solver failures to 500,
both with an {"error", "message"} body.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import DomainError, NonConvergence, SingularSystem
from . import handlers, schemas as sc

app = FastAPI(title="hardy-annulus", version=__version__)


@app.exception_handler(DomainError)
async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
    body = sc.ErrorBody(error=type(exc).__name__, message=str(exc))
    return JSONResponse(status_code=422, content=body.model_dump())


@app.exception_handler(NonConvergence)
async def _non_convergence(request: Request, exc: NonConvergence) -> JSONResponse:
    body = sc.ErrorBody(error=type(exc).__name__, message=str(exc))
    return JSONResponse(status_code=500, content=body.model_dump())


@app.exception_handler(SingularSystem)
async def _singular(request: Request, exc: SingularSystem) -> JSONResponse:
    body = sc.ErrorBody(error=type(exc).__name__, message=str(exc))
    return JSONResponse(status_code=500, content=body.model_dump())


@app.get("/health")
async def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/jk", response_model=sc.JkResponse)
async def jk(req: sc.JkRequest) -> sc.JkResponse:
    return handlers.run_jk(req)


@app.post("/kernel", response_model=sc.KernelResponse)
async def kernel(req: sc.KernelRequest) -> sc.KernelResponse:
    return handlers.run_kernel(req)


@app.post("/garabedian", response_model=sc.GarabedianResponse)
async def garabedian(req: sc.KernelRequest) -> sc.GarabedianResponse:
    return handlers.run_garabedian(req)


@app.post("/curvature", response_model=sc.CurvatureResponse)
async def curvature(req: sc.CurvatureRequest) -> sc.CurvatureResponse:
    return handlers.run_curvature(req)


@app.post("/curvature-grid", response_model=sc.CurvatureGridResponse)
async def curvature_grid(req: sc.CurvatureGridRequest) -> sc.CurvatureGridResponse:
    return handlers.run_curvature_grid(req)


@app.post("/extremal-alpha", response_model=sc.ExtremalAlphaResponse)
async def extremal_alpha(req: sc.ExtremalAlphaRequest) -> sc.ExtremalAlphaResponse:
    return handlers.run_extremal_alpha(req)


@app.post("/extremal-check", response_model=sc.ExtremalCheckResponse)
async def extremal_check(req: sc.ExtremalCheckRequest) -> sc.ExtremalCheckResponse:
    return handlers.run_extremal_check(req)


@app.post("/phi", response_model=sc.PhiResponse)
async def phi(req: sc.PhiRequest) -> sc.PhiResponse:
    return handlers.run_phi(req)


@app.post("/weights", response_model=sc.WeightsResponse)
async def weights(req: sc.WeightsRequest) -> sc.WeightsResponse:
    return handlers.run_weights(req)


@app.post("/solve-extremal", response_model=sc.SolveExtremalResponse)
async def solve_extremal(req: sc.SolveExtremalRequest) -> sc.SolveExtremalResponse:
    return handlers.run_solve_extremal(req)


@app.post("/ahlfors-check", response_model=sc.AhlforsCheckResponse)
async def ahlfors_check(req: sc.AhlforsCheckRequest) -> sc.AhlforsCheckResponse:
    return handlers.run_ahlfors_check(req)
