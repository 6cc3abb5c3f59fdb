"""Embedded golden suite: published sphere formulas, Euler characteristics and power examples.

Each case pairs a frozen expected value with a thunk computing it through the
public API.  ``run()`` evaluates them all; the CLI renders the result.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .dsl import ValidationError, evaluate
from .invariants import homotopy_poincare, poincare, report
from .poly import Polynomial, poly_eval, poly_pow
from .power import (
    almost_dominating_power,
    dominating_power,
    predicted_dominating_power,
    ratio_table,
)
from .space import InvalidRanksError, from_literal, point, power, product, sphere

__all__ = ["GoldenCase", "CASES", "run"]


@dataclass(frozen=True)
class GoldenCase:
    subject: str
    quantity: str
    expected: Any
    compute: Callable[[], Any]


@dataclass(frozen=True)
class GoldenResult:
    subject: str
    quantity: str
    expected: Any
    got: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        return f"{self.subject}: {self.quantity} expected {_fmt(self.expected)}, got {_fmt(self.got)}"


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _totals(x) -> str:
    return f"{x.pi_total},{x.h_total}"


def _error_text(thunk: Callable[[], Any]) -> str:
    try:
        thunk()
    except (InvalidRanksError, ValidationError) as exc:
        return "rejected" if "H-rank 1 forces π-rank 0" in str(exc) else f"other error: {exc}"
    return "accepted"


def _table_rows(x, limit: int) -> str:
    rows = ratio_table(x, limit).table
    return "; ".join(f"({r.n},{r.na},{r.bn},{_fmt(r.ratio)},{_fmt(r.strict)})" for r in rows)


def _cli_output(*argv: str) -> str:
    import io

    from .cli import main

    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err, env={"ELLIPTIC_CALC_COLOR": "never"})
    return f"exit {code}\n{out.getvalue()}"


def _contains(*needles: str, argv: tuple[str, ...]) -> Callable[[], bool]:
    def check() -> bool:
        text = _cli_output(*argv)
        return all(n in text for n in needles)
    return check


def _odd_sphere_cases() -> list[GoldenCase]:
    cases = []
    for k in range(0, 4):
        n = 2 * k + 1
        cases += [
            GoldenCase(f"S^{n}", "P_pi(t)", f"t^{n}" if n > 1 else "t",
                       lambda n=n: str(homotopy_poincare(sphere(n)))),
            GoldenCase(f"S^{n}", "P(t)", f"t^{n} + 1" if n > 1 else "t + 1",
                       lambda n=n: str(poincare(sphere(n)))),
            GoldenCase(f"S^{n}", "chi_pi", -1, lambda n=n: report(sphere(n)).chi_pi),
            GoldenCase(f"S^{n}", "chi", 0, lambda n=n: report(sphere(n)).chi),
        ]
    return cases


def _even_sphere_cases() -> list[GoldenCase]:
    cases = []
    for k in range(1, 4):
        n = 2 * k
        cases += [
            GoldenCase(f"S^{n}", "P_pi(t)", f"t^{4 * k - 1} + t^{2 * k}",
                       lambda n=n: str(homotopy_poincare(sphere(n)))),
            GoldenCase(f"S^{n}", "P(t)", f"t^{n} + 1", lambda n=n: str(poincare(sphere(n)))),
            GoldenCase(f"S^{n}", "chi_pi", 0, lambda n=n: report(sphere(n)).chi_pi),
            GoldenCase(f"S^{n}", "chi", 2, lambda n=n: report(sphere(n)).chi),
        ]
    return cases


def _power_cases() -> list[GoldenCase]:
    cases = []
    for n in (1, 2, 3):
        s = f"S^{2 * n}"
        cases += [
            GoldenCase(s, "p0", 3, lambda n=n: dominating_power(sphere(2 * n))),
            GoldenCase(s, "p", 1, lambda n=n: almost_dominating_power(sphere(2 * n))),
            GoldenCase(f"({s})^2", "pi_total,h_total", "4,4",
                       lambda n=n: _totals(power(sphere(2 * n), 2))),
            GoldenCase(f"({s})^3", "pi_total,h_total", "6,8",
                       lambda n=n: _totals(power(sphere(2 * n), 3))),
        ]
    for n, m in ((1, 2), (1, 1), (2, 3)):
        s = f"S^{2 * n} x S^{2 * m}"
        pair = lambda n=n, m=m: product([sphere(2 * n), sphere(2 * m)])  # noqa: E731
        cases += [
            GoldenCase(s, "p0", 2, lambda pair=pair: dominating_power(pair())),
            GoldenCase(s, "p", 1, lambda pair=pair: almost_dominating_power(pair())),
            GoldenCase(s, "pi_total,h_total", "4,4", lambda pair=pair: _totals(pair())),
            GoldenCase(f"({s})^2", "pi_total,h_total", "8,16",
                       lambda pair=pair: _totals(power(pair(), 2))),
        ]
    return cases


CASES: list[GoldenCase] = [
    # polynomial evaluations
    GoldenCase("t^5 + 1", "value at -1", 0, lambda: poly_eval(Polynomial({5: 1, 0: 1}), -1)),
    GoldenCase("t + 1", "value at -1", 0, lambda: poly_eval(Polynomial({1: 1, 0: 1}), -1)),
    GoldenCase("t^7 + t^4", "value at -1", 0, lambda: poly_eval(Polynomial({7: 1, 4: 1}), -1)),
    GoldenCase("(t^2 + 1)^3", "value at 1", 8, lambda: poly_eval(poly_pow(Polynomial({2: 1, 0: 1}), 3), 1)),
    # rank tables of spheres and the point
    GoldenCase("S^3", "pi ranks", {3: 1}, lambda: dict(sphere(3).homotopy_ranks)),
    GoldenCase("S^3", "H ranks", {0: 1, 3: 1}, lambda: dict(sphere(3).homology_ranks)),
    GoldenCase("S^2", "pi ranks", {2: 1, 3: 1}, lambda: dict(sphere(2).homotopy_ranks)),
    GoldenCase("S^2", "H ranks", {0: 1, 2: 1}, lambda: dict(sphere(2).homology_ranks)),
    GoldenCase("S^4", "pi ranks", {4: 1, 7: 1}, lambda: dict(sphere(4).homotopy_ranks)),
    GoldenCase("S^4", "H ranks", {0: 1, 4: 1}, lambda: dict(sphere(4).homology_ranks)),
    GoldenCase("pt", "P_pi(1),P(1)", "0,1", lambda: _totals(point())),
    GoldenCase("pt", "P(t)", "1", lambda: str(poincare(point()))),
    GoldenCase("pt", "P_pi(t)", "0", lambda: str(homotopy_poincare(point()))),
    GoldenCase("S^5", "P_pi(t)", "t^5", lambda: str(homotopy_poincare(sphere(5)))),
    GoldenCase("S^5", "P(t)", "t^5 + 1", lambda: str(poincare(sphere(5)))),
    GoldenCase("S^2 x S^2 x S^2", "pi_total,h_total", "6,8",
               lambda: _totals(product([sphere(2)] * 3))),
    # literals
    GoldenCase("{pi: {3: 1}, h: {0: 1, 3: 1}}", "equals S^3", True,
               lambda: from_literal({3: 1}, {0: 1, 3: 1}) == sphere(3)),
    GoldenCase("{pi: {2: 5}, h: {0: 1}}", "literal", "rejected",
               lambda: _error_text(lambda: from_literal({2: 5}, {0: 1}))),
    GoldenCase("{pi: {2: 5}, h: {0: 1}}", "expression", "rejected",
               lambda: _error_text(lambda: evaluate("{pi: {2: 5}, h: {0: 1}}"))),
    # reports
    GoldenCase("S^3", "pi_total,h_total", "1,2", lambda: _totals(sphere(3))),
    GoldenCase("S^3", "hilali_strict", True, lambda: report(sphere(3)).hilali_strict),
    GoldenCase("S^3", "mirror_holds", True, lambda: report(sphere(3)).mirror_holds),
    GoldenCase("S^3", "dichotomy_consistent", True, lambda: report(sphere(3)).dichotomy_consistent),
    GoldenCase("S^2", "hilali_holds", True, lambda: report(sphere(2)).hilali_holds),
    GoldenCase("S^2", "hilali_strict", False, lambda: report(sphere(2)).hilali_strict),
    GoldenCase("(S^2)^3", "hilali_strict", True, lambda: report(power(sphere(2), 3)).hilali_strict),
    # dominating powers
    GoldenCase("pt", "p0", 1, lambda: dominating_power(point())),
    GoldenCase("S^2", "predicted p0", 3, lambda: predicted_dominating_power(sphere(2))),
    GoldenCase("S^2 x S^4", "predicted p0", 2,
               lambda: predicted_dominating_power(product([sphere(2), sphere(4)]))),
    GoldenCase("S^3", "predicted p0", 1, lambda: predicted_dominating_power(sphere(3))),
    GoldenCase("S^2", "ratio table n<=3", "(1,2,2,1/1,false); (2,4,4,1/1,false); (3,6,8,3/4,true)",
               lambda: _table_rows(sphere(2), 3)),
    *_odd_sphere_cases(),
    *_even_sphere_cases(),
    *_power_cases(),
    # command line surface
    GoldenCase("eval S2", "output", True,
               _contains("P_pi(t) = t^3 + t^2", "P(t) = t^2 + 1", "hilali: holds (2 <= 2)",
                         argv=("eval", "S2"))),
    GoldenCase("eval pt", "output", True,
               _contains("P_pi(1) = 0 < P(1) = 1", argv=("eval", "pt"))),
    GoldenCase("power S2", "output", True, _contains("p0 = 3, p = 1", argv=("power", "S2"))),
    GoldenCase("power S2 * S4", "output", True,
               _contains("p0 = 2, p = 1", argv=("power", "S2 * S4"))),
    GoldenCase("check S2 * S3 * S4", "exit", True,
               _contains("exit 0", "hilali: holds", "mirror: holds", "dichotomy: holds",
                         argv=("check", "S2 * S3 * S4"))),
]


def run(cases: list[GoldenCase] | None = None) -> list[GoldenResult]:
    out = []
    for case in cases if cases is not None else CASES:
        try:
            got = case.compute()
        except Exception as exc:  # a crash is reported as a mismatch, not raised
            got = f"error: {type(exc).__name__}: {exc}"
        out.append(GoldenResult(case.subject, case.quantity, case.expected, got))
    return out
