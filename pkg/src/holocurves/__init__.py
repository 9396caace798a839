"""Holomorphic curves S^2 -> CP^2, their ramification data, conjugate
polars, Gauss transforms, and the associated exact and numerical checks."""

from .rational import GaussianRational
from .poly import (
    BezoutPair,
    ExactPoly,
    bezout_bounded,
    exact_div,
    gcd_family,
    gcd_pair,
    gcd_triple_recombined,
    poly_divmod,
    reverse,
)
from .curve import (
    HoloCurve,
    InvariantSheet,
    ProjPoint,
    RamificationData,
    act,
    chart_flip,
    conjugate_polar,
    fs_distance,
    generic_position,
    invariant_sheet,
    invariants,
    ramification,
    validate,
    wedge,
)
from .gauss import (
    INFINITY,
    GaussEvaluator,
    GeometryReport,
    ProjectorField,
    QuadratureSpec,
    conformality_residual,
    degree_energy,
    gauss_eval,
    harmonicity_residual,
    orthogonality_check,
    projector,
)
from .kernel import KernelReport, KernelSpec, TMatrix, build_T, kernel_report, lemma32_check, pkl_basis
from .family import CurveFamily, TraceReport, differential_probe, preset, smooth_divisor, trace_gauss

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
