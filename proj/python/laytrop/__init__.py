"""Exact layered tropical algebra."""

from ._laytrop import (
    Error,
    ParseError,
    Polynomial,
    Scalar,
    corner_locus,
    explode,
    functionally_equal,
    kapranov,
    layering,
    leading,
    localize,
    nu_equivalent,
    root_valuations,
    surpasses,
    trop,
    val,
    zariski,
)

__all__ = [
    "Error",
    "ParseError",
    "Polynomial",
    "Scalar",
    "corner_locus",
    "explode",
    "functionally_equal",
    "kapranov",
    "layering",
    "leading",
    "localize",
    "nu_equivalent",
    "root_valuations",
    "surpasses",
    "trop",
    "val",
    "zariski",
]
