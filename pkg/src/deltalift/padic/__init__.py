from .dist import DistParams, MomentDistribution
from .hida import ClassicalPoint, HidaMember, HidaSpec, p_stabilize
from .lambda_lift import (
    ExceptionalZeroReport,
    LambdaCoefficientSample,
    LambdaKohnenReport,
    PushforwardValues,
    exceptional_zero_scan,
    gs_pvalue,
    jq_pushforward,
    lambda_kohnen_check,
    lambda_shintani_coeff,
)
from .measures import MeasureSymbol, classical_to_initial, lift_overconvergent
from .scalars import PadicScalar

__all__ = [
    "DistParams",
    "MomentDistribution",
    "ClassicalPoint",
    "HidaMember",
    "HidaSpec",
    "p_stabilize",
    "PadicScalar",
    "MeasureSymbol",
    "classical_to_initial",
    "lift_overconvergent",
    "jq_pushforward",
    "lambda_shintani_coeff",
    "gs_pvalue",
    "lambda_kohnen_check",
    "exceptional_zero_scan",
    "PushforwardValues",
    "LambdaCoefficientSample",
    "LambdaKohnenReport",
    "ExceptionalZeroReport",
]
