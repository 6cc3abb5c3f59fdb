"""Dominating powers: the least n for which X^n has more homology than homotopy.

For X^n the homotopy total is ``n * a`` and the homology total is ``b ** n``
(``a``, ``b`` the totals of X), so every search here compares those two
integers directly instead of building X^n.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from ._decimal import to_decimal
from .invariants import fraction_json
from .space import EllipticRanks

__all__ = [
    "ITERATION_CAP",
    "TABLE_LIMIT_MAX",
    "SearchCapExceeded",
    "PowerRow",
    "PowerReport",
    "dominating_power",
    "almost_dominating_power",
    "predicted_dominating_power",
    "ratio_table",
]

ITERATION_CAP = 10**6
TABLE_LIMIT_MAX = 10**4


class SearchCapExceeded(RuntimeError):
    """The power scan hit :data:`ITERATION_CAP`; only possible for invalid totals."""


def _totals(x: EllipticRanks) -> tuple[int, int]:
    return x.pi_total, x.h_total


def _scan(a: int, b: int, strict: bool) -> int:
    bn = b
    for n in range(1, ITERATION_CAP + 1):
        na = n * a
        if na < bn or (not strict and na == bn):
            return n
        bn *= b
    raise SearchCapExceeded(f"no power found below {ITERATION_CAP} for a={a}, b={b}")


def dominating_power(x: EllipticRanks) -> int:
    """Least n >= 1 with ``n*a < b**n``."""
    return _scan(*_totals(x), strict=True)


def almost_dominating_power(x: EllipticRanks) -> int:
    """Least n >= 1 with ``n*a <= b**n``."""
    return _scan(*_totals(x), strict=False)


def predicted_dominating_power(x: EllipticRanks) -> int | None:
    """Closed-form dominating power for spaces with ``a <= b``; ``None`` when ``a > b``."""
    a, b = _totals(x)
    if a > b:
        return None
    if a < b:
        return 1
    if b == 2:
        return 3
    if b >= 3:
        return 2
    return 1


@dataclass(frozen=True)
class PowerRow:
    n: int
    na: int
    bn: int
    ratio: Fraction
    strict: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "na": to_decimal(self.na),
            "bn": to_decimal(self.bn),
            "ratio": fraction_json(self.ratio),
            "strict": self.strict,
        }


@dataclass(frozen=True)
class PowerReport:
    label: str
    p0: int
    p: int
    predicted_p0: int | None
    table: tuple[PowerRow, ...]

    def to_json(self) -> dict:
        return {
            "p0": self.p0,
            "p": self.p,
            "predicted_p0": self.predicted_p0,
            "table": [row.to_json() for row in self.table],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "n_a", "b_n", "ratio", "strict"])
        for row in self.table:
            r = row.ratio
            w.writerow([
                row.n,
                to_decimal(row.na),
                to_decimal(row.bn),
                f"{to_decimal(r.numerator)}/{to_decimal(r.denominator)}",
                "true" if row.strict else "false",
            ])
        return buf.getvalue()


def ratio_table(x: EllipticRanks, table_limit: int = 10) -> PowerReport:
    if isinstance(table_limit, bool) or not isinstance(table_limit, int):
        raise TypeError(f"table_limit must be an int, got {table_limit!r}")
    if not 1 <= table_limit <= TABLE_LIMIT_MAX:
        raise ValueError(f"table_limit must be in 1..{TABLE_LIMIT_MAX}, got {table_limit}")
    a, b = _totals(x)
    rows = []
    bn = 1
    for n in range(1, table_limit + 1):
        bn *= b
        na = n * a
        rows.append(PowerRow(n, na, bn, Fraction(na, bn), na < bn))
    return PowerReport(
        label=x.label,
        p0=dominating_power(x),
        p=almost_dominating_power(x),
        predicted_p0=predicted_dominating_power(x),
        table=tuple(rows),
    )
