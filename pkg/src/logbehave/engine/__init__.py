"""Exact evaluation, quotients, classification and the transform tests."""

from .classify import (
    ClassificationReport,
    LimitEstimate,
    NewtonReport,
    SemiadditivityReport,
    Verdict,
    classify_window,
    constant_coeff_classify,
    delta,
    limit_estimate,
    newton_test,
    semiadditivity_check,
    within,
)
from .terms import (
    EvaluationError,
    QuotientSequence,
    TermList,
    divide_by_factorial,
    eval_quotient_recursion,
    eval_terms,
    eval_upto,
    exponent_egf_coefficients,
    quotients,
)
from .transform import HypothesisReport, bc_hypothesis_check, bc_transform, bc_transform_series
from .triangle import Triangle, TriangleReport, triangle_checks, triangle_eval

__all__ = [
    "ClassificationReport", "LimitEstimate", "NewtonReport", "SemiadditivityReport", "Verdict",
    "classify_window", "constant_coeff_classify", "delta", "limit_estimate", "newton_test",
    "semiadditivity_check", "within",
    "EvaluationError", "QuotientSequence", "TermList", "divide_by_factorial",
    "eval_quotient_recursion", "eval_terms", "eval_upto", "exponent_egf_coefficients", "quotients",
    "HypothesisReport", "bc_hypothesis_check", "bc_transform", "bc_transform_series",
    "Triangle", "TriangleReport", "triangle_checks", "triangle_eval",
]
