"""Exact construction and certification of polygon-to-rectangle dissections."""

from .scalar import (
    Scalar,
    ScalarError,
    ScalarParseError,
    approx,
    cos_pi,
    format_scalar,
    parse_scalar,
    rat,
    sign,
    sin_pi,
    sqrt_nonneg,
    trig_pi,
)

__all__ = [
    "Scalar",
    "ScalarError",
    "ScalarParseError",
    "approx",
    "cos_pi",
    "format_scalar",
    "parse_scalar",
    "rat",
    "sign",
    "sin_pi",
    "sqrt_nonneg",
    "trig_pi",
]
