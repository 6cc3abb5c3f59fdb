"""Exact calculator for rational-homotopy invariants of formal elliptic spaces."""

__version__ = "0.1.0"

from .dsl import ParseError, ValidationError, elaborate, evaluate, parse, to_source
from .invariants import InvariantReport, homotopy_poincare, poincare, report
from .poly import Polynomial, poly_add, poly_eval, poly_mul, poly_pow
from .power import (
    PowerReport,
    almost_dominating_power,
    dominating_power,
    predicted_dominating_power,
    ratio_table,
)
from .space import (
    EllipticRanks,
    InvalidRanksError,
    LiteralError,
    MirrorWarning,
    Strictness,
    from_literal,
    point,
    power,
    product,
    sphere,
)

__all__ = [
    "EllipticRanks",
    "InvalidRanksError",
    "InvariantReport",
    "LiteralError",
    "MirrorWarning",
    "ParseError",
    "Polynomial",
    "PowerReport",
    "Strictness",
    "ValidationError",
    "almost_dominating_power",
    "dominating_power",
    "elaborate",
    "evaluate",
    "from_literal",
    "homotopy_poincare",
    "parse",
    "point",
    "poincare",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_pow",
    "power",
    "predicted_dominating_power",
    "product",
    "ratio_table",
    "report",
    "sphere",
    "to_source",
]
