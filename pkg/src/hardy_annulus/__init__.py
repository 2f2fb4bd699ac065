"""Weighted Hardy-space kernels, curvature, and extremal characters on the annulus."""

from .characters import (
    CharacterIndex,
    blaschke_index,
    char_range_check,
    chars_equivalent,
    extremal_alpha,
    harmonic_measure,
    mod1,
    phi_char,
    szego_zero_invariance,
)
from .curvature import (
    EXTREMALITY_TOL,
    CurvatureReport,
    RationalFunction,
    curvature_bound,
    curvature_fd,
    curvature_log_annulus,
    curvature_log_disc,
    curvature_report,
    gap_alpha_scan,
    localized_model,
    szego_diag,
)
from .errors import DomainError, NonConvergence, PoleError, SingularSystem
from .extremal import (
    AHLFORS_SWITCH_RADIUS,
    DEFAULT_TRUNCATION,
    ExtremalSolution,
    ahlfors_map,
    candidate_g,
    gram_diag,
    solve_extremal,
)
from .kernels import (
    KernelDiagDerivs,
    garabedian_kernel,
    hardy_kernel,
    kernel_diag_derivatives,
    szego_disc,
    szego_zero,
)
from .qkernel import (
    DEFAULT_CONTROL,
    POLE_FLOOR,
    AnnulusGeometry,
    SeriesControl,
    jk_product,
    jk_product_deflated,
    jk_series,
    jk_zero_locus,
)
from .shift import (
    DEFAULT_WINDOW,
    shift_weight,
    shift_weights,
    shifts_equivalent,
    truncated_shift_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AnnulusGeometry",
    "SeriesControl",
    "DEFAULT_CONTROL",
    "POLE_FLOOR",
    "DomainError",
    "PoleError",
    "NonConvergence",
    "SingularSystem",
    "jk_series",
    "jk_product",
    "jk_product_deflated",
    "jk_zero_locus",
    "KernelDiagDerivs",
    "szego_disc",
    "hardy_kernel",
    "garabedian_kernel",
    "szego_zero",
    "kernel_diag_derivatives",
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
    "CharacterIndex",
    "mod1",
    "harmonic_measure",
    "extremal_alpha",
    "phi_char",
    "char_range_check",
    "chars_equivalent",
    "blaschke_index",
    "szego_zero_invariance",
    "shift_weight",
    "shift_weights",
    "shifts_equivalent",
    "truncated_shift_matrix",
    "DEFAULT_WINDOW",
    "ExtremalSolution",
    "DEFAULT_TRUNCATION",
    "AHLFORS_SWITCH_RADIUS",
    "gram_diag",
    "solve_extremal",
    "ahlfors_map",
    "candidate_g",
    "__version__",
]
