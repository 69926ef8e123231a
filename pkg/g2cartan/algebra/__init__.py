"""Exact arithmetic: scalar tower, parameter polynomials and sparse linear algebra."""

from .linalg import LinearCoordinates, determinant, rank, relations
from .param_poly import ParamPoly, poly
from .scalar_tower import I, ONE, ZERO, Scalar, parse_scalar, real_sign, sqrt_scalar

__all__ = [
    "I",
    "ONE",
    "ZERO",
    "LinearCoordinates",
    "ParamPoly",
    "Scalar",
    "determinant",
    "parse_scalar",
    "poly",
    "rank",
    "real_sign",
    "relations",
    "sqrt_scalar",
]
