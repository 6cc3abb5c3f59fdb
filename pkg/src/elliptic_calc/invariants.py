"""Numerical invariants of a formal elliptic space and the three inequality checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._decimal import to_decimal
from .poly import Polynomial, poly_eval
from .space import EllipticRanks

__all__ = ["InvariantReport", "homotopy_poincare", "poincare", "report", "fraction_json"]


def homotopy_poincare(x: EllipticRanks) -> Polynomial:
    return x.homotopy_polynomial


def poincare(x: EllipticRanks) -> Polynomial:
    return x.homology_polynomial


def fraction_json(r: Fraction) -> dict[str, str]:
    return {"num": to_decimal(r.numerator), "den": to_decimal(r.denominator)}


@dataclass(frozen=True)
class InvariantReport:
    label: str
    homotopy_poincare: Polynomial
    poincare: Polynomial
    pi_total: int
    h_total: int
    chi: int
    chi_pi: int
    hilali_holds: bool
    hilali_strict: bool
    mirror_holds: bool
    dichotomy_consistent: bool
    ratio: Fraction
    simply_connected: bool

    def to_json(self) -> dict:
        """Flat JSON object; integers that can grow without bound are decimal strings."""
        return {
            "label": self.label,
            "homotopy_poincare": self.homotopy_poincare.to_json(),
            "poincare": self.poincare.to_json(),
            "pi_total": to_decimal(self.pi_total),
            "h_total": to_decimal(self.h_total),
            "chi": to_decimal(self.chi),
            "chi_pi": to_decimal(self.chi_pi),
            "hilali_holds": self.hilali_holds,
            "hilali_strict": self.hilali_strict,
            "mirror_holds": self.mirror_holds,
            "dichotomy_consistent": self.dichotomy_consistent,
            "ratio": fraction_json(self.ratio),
            "simply_connected": self.simply_connected,
        }


def report(x: EllipticRanks) -> InvariantReport:
    p_pi = homotopy_poincare(x)
    p = poincare(x)
    a = poly_eval(p_pi, 1)
    b = poly_eval(p, 1)
    chi = poly_eval(p, -1)
    chi_pi = poly_eval(p_pi, -1)
    return InvariantReport(
        label=x.label,
        homotopy_poincare=p_pi,
        poincare=p,
        pi_total=a,
        h_total=b,
        chi=chi,
        chi_pi=chi_pi,
        hilali_holds=a <= b,
        hilali_strict=a < b,
        mirror_holds=chi_pi <= 0 <= chi,
        dichotomy_consistent=(chi_pi == 0) == (chi > 0),
        ratio=Fraction(a, b),
        simply_connected=x.simply_connected,
    )
