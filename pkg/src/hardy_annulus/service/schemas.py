"""Request and response models for the compute service.

Every response is an envelope {command, inputs, outputs} where inputs
echoes the validated request.  Complex scalars travel as {"re": x,
"im": y} objects everywhere.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ComplexValue(BaseModel):
    model_config = ConfigDict(extra="forbid")

    re: float
    im: float = 0.0

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexValue":
        return cls(re=z.real, im=z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class ComputeRequest(BaseModel):
    """Common knobs: geometry plus series truncation control."""

    model_config = ConfigDict(extra="forbid")

    R: float = Field(gt=0.0, lt=1.0)
    tol: float = Field(default=1e-14, gt=0.0)
    max_terms: int = Field(default=10_000, ge=8)


# --- jk ---------------------------------------------------------------


class JkRequest(ComputeRequest):
    b: ComplexValue
    t: ComplexValue
    method: Literal["series", "product", "both"] = "both"


class JkOutputs(BaseModel):
    series: Optional[ComplexValue] = None
    product: Optional[ComplexValue] = None
    difference: Optional[float] = None


class JkResponse(BaseModel):
    command: Literal["jk"] = "jk"
    inputs: JkRequest
    outputs: JkOutputs


# --- kernel / garabedian ----------------------------------------------


class KernelRequest(ComputeRequest):
    alpha: float
    z: ComplexValue
    w: ComplexValue


class KernelOutputs(BaseModel):
    value: ComplexValue


class KernelResponse(BaseModel):
    command: Literal["kernel"] = "kernel"
    inputs: KernelRequest
    outputs: KernelOutputs


class GarabedianResponse(BaseModel):
    command: Literal["garabedian"] = "garabedian"
    inputs: KernelRequest
    outputs: KernelOutputs


# --- curvature ----------------------------------------------------------


class CurvatureRequest(ComputeRequest):
    alpha: float
    zeta: ComplexValue
    extremality_tol: float = Field(default=1e-8, gt=0.0)


class CurvatureOutputs(BaseModel):
    curvature_log: float
    bound: float
    gap: float
    extremal: bool


class CurvatureResponse(BaseModel):
    command: Literal["curvature"] = "curvature"
    inputs: CurvatureRequest
    outputs: CurvatureOutputs


class CurvatureGridRequest(ComputeRequest):
    alpha: float
    rmin: float = Field(gt=0.0, lt=1.0)
    rmax: float = Field(gt=0.0, lt=1.0)
    n: int = Field(ge=1)
    extremality_tol: float = Field(default=1e-8, gt=0.0)

    @model_validator(mode="after")
    def _ordered(self):
        if self.rmin > self.rmax:
            raise ValueError("rmin must not exceed rmax")
        return self


class CurvatureGridRow(BaseModel):
    r: float
    curvature_log: float
    bound: float
    gap: float


class CurvatureGridOutputs(BaseModel):
    rows: list[CurvatureGridRow]


class CurvatureGridResponse(BaseModel):
    command: Literal["curvature-grid"] = "curvature-grid"
    inputs: CurvatureGridRequest
    outputs: CurvatureGridOutputs


# --- characters ---------------------------------------------------------


class ExtremalAlphaRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    R: float = Field(gt=0.0, lt=1.0)
    zeta: ComplexValue


class ExtremalAlphaOutputs(BaseModel):
    alpha: float
    harmonic_measure: float


class ExtremalAlphaResponse(BaseModel):
    command: Literal["extremal-alpha"] = "extremal-alpha"
    inputs: ExtremalAlphaRequest
    outputs: ExtremalAlphaOutputs


class ExtremalCheckRequest(ComputeRequest):
    zeta: ComplexValue
    alpha: Optional[float] = None
    extremality_tol: float = Field(default=1e-8, gt=0.0)


class ExtremalCheckOutputs(BaseModel):
    alpha: float
    alpha_star: float
    curvature_log: float
    bound: float
    gap: float
    extremal: bool
    garabedian_at_szego_zero: float
    jk_criterion: float


class ExtremalCheckResponse(BaseModel):
    command: Literal["extremal-check"] = "extremal-check"
    inputs: ExtremalCheckRequest
    outputs: ExtremalCheckOutputs


class PhiRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    omegas: Optional[list[float]] = None
    R: Optional[float] = Field(default=None, gt=0.0, lt=1.0)
    zeta: Optional[ComplexValue] = None

    @model_validator(mode="after")
    def _one_source(self):
        direct = self.omegas is not None
        derived = self.R is not None and self.zeta is not None
        if direct == derived:
            raise ValueError("give either omegas or both R and zeta")
        return self


class PhiOutputs(BaseModel):
    components: list[float]
    total: float
    in_range: bool


class PhiResponse(BaseModel):
    command: Literal["phi"] = "phi"
    inputs: PhiRequest
    outputs: PhiOutputs


# --- shift weights -------------------------------------------------------


class WeightsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    R: float = Field(gt=0.0, lt=1.0)
    alpha: float
    n_min: int = -64
    n_max: int = 64

    @model_validator(mode="after")
    def _ordered(self):
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        return self


class WeightRow(BaseModel):
    n: int
    weight: float


class WeightsOutputs(BaseModel):
    rows: list[WeightRow]


class WeightsResponse(BaseModel):
    command: Literal["weights"] = "weights"
    inputs: WeightsRequest
    outputs: WeightsOutputs


# --- extremal solver ------------------------------------------------------


class SolveExtremalRequest(ComputeRequest):
    alpha: float
    zeta: ComplexValue
    N: int = Field(default=80, ge=2)
    include_coefficients: bool = False


class SolveExtremalOutputs(BaseModel):
    value: float
    closed_form: float
    residual: float
    constraint_residuals: list[float]
    N: int
    coefficients: Optional[list[ComplexValue]] = None


class SolveExtremalResponse(BaseModel):
    command: Literal["solve-extremal"] = "solve-extremal"
    inputs: SolveExtremalRequest
    outputs: SolveExtremalOutputs


class AhlforsCheckRequest(ComputeRequest):
    zeta: ComplexValue
    samples: int = Field(default=256, ge=4)


class AhlforsCheckOutputs(BaseModel):
    max_deviation_outer: float
    max_deviation_inner: float
    f_at_zeta: float
    fprime_deviation: float
    samples: int


class AhlforsCheckResponse(BaseModel):
    command: Literal["ahlfors-check"] = "ahlfors-check"
    inputs: AhlforsCheckRequest
    outputs: AhlforsCheckOutputs


class ErrorBody(BaseModel):
    error: str
    message: str
