"""Exact arithmetic kernel: Q, Q(sqrt d), polynomials, rational functions,
truncated series and ray positivity."""

from fractions import Fraction as Rat

from .mpoly import MPoly, orthant_sign
from .poly import PolyQ, X, poly_shift
from .positivity import (
    DEFAULT_MAX_SHIFT,
    RayVerdict,
    Status,
    ratfun_ray_positive,
    ray_positive,
    sturm_root_count,
    sturm_sequence,
)
from .quad import MixedRadicalError, Quad, Scalar, format_scalar, quad_sign, scalar, sign, to_float
from .ratfun import RatFun
from .series import SeriesQ, series_exp

__all__ = [
    "Rat", "Quad", "Scalar", "MixedRadicalError", "scalar", "sign", "quad_sign",
    "format_scalar", "to_float", "PolyQ", "X", "poly_shift", "RatFun", "SeriesQ",
    "series_exp", "Status", "RayVerdict", "ray_positive", "ratfun_ray_positive",
    "sturm_root_count", "sturm_sequence", "DEFAULT_MAX_SHIFT", "MPoly", "orthant_sign",
]
