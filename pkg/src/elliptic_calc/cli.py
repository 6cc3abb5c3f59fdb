"""Command-line front end.

Exit codes: 0 success (and every check holds), 1 a check failed,
2 the input could not be parsed or validated.
"""

from __future__ import annotations

import argparse
import decimal
import json
import os
import sys
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import TextIO

from . import __version__
from ._decimal import to_decimal
from .dsl import ParseError, ValidationError, evaluate
from .invariants import InvariantReport, report
from .paper_examples import run as run_paper_examples
from .power import TABLE_LIMIT_MAX, PowerReport, SearchCapExceeded, ratio_table
from .space import EllipticRanks, InvalidRanksError, MirrorWarning, Strictness

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

COLOR_ENV = "ELLIPTIC_CALC_COLOR"


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _table_limit(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= n <= TABLE_LIMIT_MAX:
        raise argparse.ArgumentTypeError(f"must be in 1..{TABLE_LIMIT_MAX}")
    return n


@lru_cache(maxsize=1)
def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--permissive", action="store_true",
                        help="accept literals with pi_1 rank or more homotopy than homology")
    common.add_argument("--approx", action="store_true",
                        help="also show ratios as 6-significant-digit decimals (human format)")
    common.add_argument("--stdin", action="store_true",
                        help="read one expression per line, write one JSON object per line")

    p = _ArgumentParser(prog="elliptic-calc",
                        description="Exact rational-homotopy invariants of formal elliptic spaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    sp = sub.add_parser("eval", parents=[common], help="print every invariant of a space")
    sp.add_argument("expr", nargs="?")
    sp = sub.add_parser("power", parents=[common], help="dominating powers and the ratio table")
    sp.add_argument("expr", nargs="?")
    sp.add_argument("--table-limit", type=_table_limit, default=10, metavar="N")
    sp = sub.add_parser("check", parents=[common], help="Hilali, mirror and dichotomy checks")
    sp.add_argument("expr", nargs="?")
    sp = sub.add_parser("paper-examples", help="run the embedded golden examples")
    sp.add_argument("--format", choices=("human", "json"), default="human")
    return p


# ---------------------------------------------------------------- rendering

class _Style:
    def __init__(self, color: bool):
        self.color = color

    def verdict(self, ok: bool, yes: str = "holds", no: str = "fails") -> str:
        word = yes if ok else no
        if not self.color:
            return word
        return f"\x1b[{32 if ok else 31}m{word}\x1b[0m"


def _use_color(env, stream) -> bool:
    mode = env.get(COLOR_ENV, "auto").strip().lower()
    if mode == "never":
        return False
    if mode == "always":
        return True
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


def _frac(r: Fraction) -> str:
    if r.denominator == 1:
        return to_decimal(r.numerator)
    return f"{to_decimal(r.numerator)}/{to_decimal(r.denominator)}"


def _approx(r: Fraction) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = 6
        ctx.Emin = -10**9
        ctx.Emax = 10**9
        d = decimal.Decimal(r.numerator) / decimal.Decimal(r.denominator)
        return format(d, ".6g")


def _rel(a: int, b: int) -> str:
    return "<" if a < b else ("=" if a == b else ">")


def _check_lines(rep: InvariantReport, style: _Style) -> list[str]:
    a, b = to_decimal(rep.pi_total), to_decimal(rep.h_total)
    chi, chi_pi = to_decimal(rep.chi), to_decimal(rep.chi_pi)
    hil_op = "<=" if rep.hilali_holds else ">"
    return [
        f"hilali: {style.verdict(rep.hilali_holds)} ({a} {hil_op} {b})",
        f"mirror: {style.verdict(rep.mirror_holds)} "
        f"(chi_pi = {chi_pi} {'<=' if rep.chi_pi <= 0 else '>'} 0 "
        f"{'<=' if rep.chi >= 0 else '>'} chi = {chi})",
        f"dichotomy: {style.verdict(rep.dichotomy_consistent)} "
        f"(chi_pi = {chi_pi} {'=' if rep.chi_pi == 0 else '!='} 0, "
        f"chi = {chi} {'>' if rep.chi > 0 else '<='} 0)",
    ]


def render_eval(rep: InvariantReport, style: _Style, approx: bool = False) -> str:
    a, b = rep.pi_total, rep.h_total
    ratio = _frac(rep.ratio)
    if approx:
        ratio += f" (~ {_approx(rep.ratio)})"
    lines = [
        f"space: {rep.label}",
        f"P_pi(t) = {rep.homotopy_poincare}",
        f"P(t) = {rep.poincare}",
        f"P_pi(1) = {to_decimal(a)} {_rel(a, b)} P(1) = {to_decimal(b)}",
        f"chi_pi = P_pi(-1) = {to_decimal(rep.chi_pi)}",
        f"chi = P(-1) = {to_decimal(rep.chi)}",
        f"h = P_pi(1)/P(1) = {ratio}",
        f"simply connected: {'yes' if rep.simply_connected else 'no'}",
        *_check_lines(rep, style)[:1],
        f"strict: {style.verdict(rep.hilali_strict, 'yes', 'no')} "
        f"({to_decimal(a)} {_rel(a, b)} {to_decimal(b)})",
        *_check_lines(rep, style)[1:],
    ]
    return "\n".join(lines) + "\n"


def render_power(pr: PowerReport, style: _Style, approx: bool = False) -> str:
    pred = (str(pr.predicted_p0) if pr.predicted_p0 is not None
            else "none (homotopy exceeds homology)")
    lines = [f"space: {pr.label}", f"p0 = {pr.p0}, p = {pr.p}", f"predicted p0 = {pred}"]
    header = ["n", "n*a", "b^n", "ratio", "strict"] + (["~ratio"] if approx else [])
    rows = []
    for r in pr.table:
        row = [str(r.n), to_decimal(r.na), to_decimal(r.bn), _frac(r.ratio),
               "yes" if r.strict else "no"]
        if approx:
            row.append(_approx(r.ratio))
        rows.append(row)
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for row in rows:
        cells = [c.rjust(w) for c, w in zip(row, widths)]
        cells[4] = cells[4].replace(row[4], style.verdict(row[4] == "yes", "yes", "no"))
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"


def check_json(rep: InvariantReport) -> dict:
    return {
        "label": rep.label,
        "simply_connected": rep.simply_connected,
        "hilali": {"holds": rep.hilali_holds, "pi_total": to_decimal(rep.pi_total),
                   "h_total": to_decimal(rep.h_total)},
        "mirror": {"holds": rep.mirror_holds, "chi_pi": to_decimal(rep.chi_pi),
                   "chi": to_decimal(rep.chi)},
        "dichotomy": {"holds": rep.dichotomy_consistent, "chi_pi": to_decimal(rep.chi_pi),
                      "chi": to_decimal(rep.chi)},
        "all_hold": _all_hold(rep),
    }


def _all_hold(rep: InvariantReport) -> bool:
    return rep.hilali_holds and rep.mirror_holds and rep.dichotomy_consistent


# ---------------------------------------------------------------- execution

class _InputError(Exception):
    def __init__(self, message: str, span=None, rendered: str | None = None):
        super().__init__(message)
        self.message = message
        self.span = span
        self.rendered = rendered or message

    def to_json(self, text: str) -> dict:
        err: dict = {"message": self.message}
        if self.span is not None:
            err["span"] = {"start": self.span.start, "end": self.span.end}
        return {"input": text, "error": err}


def _space(text: str | None, strictness: Strictness, warn: list[str]) -> EllipticRanks:
    if text is None:
        raise _InputError("missing expression (pass one, or use --stdin)")
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", MirrorWarning)
            x = evaluate(text, strictness)
    except (ParseError, ValidationError) as exc:
        raise _InputError(exc.message, exc.span, exc.render(text)) from None
    except (InvalidRanksError, ValueError, RecursionError) as exc:
        raise _InputError(str(exc)) from None
    warn.extend(str(w.message) for w in caught if issubclass(w.category, MirrorWarning))
    return x


def _execute(args, text: str | None, warn: list[str]):
    """Return (exit code, json payload, result object) for one expression."""
    strictness = Strictness.PERMISSIVE if args.permissive else Strictness.STRICT
    x = _space(text, strictness, warn)
    if args.command == "eval":
        rep = report(x)
        return EXIT_OK, rep.to_json(), rep
    if args.command == "check":
        rep = report(x)
        code = EXIT_OK if _all_hold(rep) else EXIT_CHECK_FAILED
        return code, check_json(rep), rep
    if args.command == "power":
        try:
            pr = ratio_table(x, args.table_limit)
        except SearchCapExceeded as exc:
            raise _InputError(f"internal error: {exc}") from None
        return EXIT_OK, pr.to_json(), pr
    raise AssertionError(args.command)


def _emit_human(args, obj, style: _Style, out: TextIO):
    if args.command == "eval":
        out.write(render_eval(obj, style, args.approx))
    elif args.command == "check":
        out.write("\n".join(_check_lines(obj, style)) + "\n")
    else:
        out.write(render_power(obj, style, args.approx))


def _run_single(args, out: TextIO, err: TextIO, style: _Style) -> int:
    warn: list[str] = []
    try:
        code, payload, obj = _execute(args, args.expr, warn)
    except _InputError as exc:
        err.write(f"error: {exc.rendered}\n")
        return EXIT_INPUT_ERROR
    for w in warn:
        err.write(f"warning: {w}\n")
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        out.write(obj.to_csv())
    else:
        _emit_human(args, obj, style, out)
    return code


def _run_batch(args, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    worst = EXIT_OK
    for raw in stdin:
        text = raw.rstrip("\r\n")
        if not text.strip():
            continue
        warn: list[str] = []
        try:
            code, payload, _ = _execute(args, text, warn)
        except _InputError as exc:
            code, payload = EXIT_INPUT_ERROR, exc.to_json(text)
        if warn:
            payload = {**payload, "warnings": warn}
        out.write(json.dumps(payload) + "\n")
        worst = max(worst, code)
    return worst


def _run_paper_examples(args, out: TextIO, style: _Style) -> int:
    results = run_paper_examples()
    ok = all(r.ok for r in results)
    if args.format == "json":
        out.write(json.dumps({
            "all_match": ok,
            "results": [{"line": r.line(), "match": r.ok} for r in results],
        }, indent=2) + "\n")
    else:
        for r in results:
            out.write(f"{style.verdict(r.ok, 'PASS', 'FAIL')}  {r.line()}\n")
        passed = sum(r.ok for r in results)
        out.write(f"{passed}/{len(results)} examples match\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def main(argv=None, *, stdin=None, stdout=None, stderr=None, env=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    env = os.environ if env is None else env
    try:
        args = _parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT_ERROR
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    style = _Style(_use_color(env, out))
    if args.command == "paper-examples":
        return _run_paper_examples(args, out, style)
    if args.format == "csv" and args.command != "power":
        err.write(f"error: csv output is only available for 'power', not {args.command!r}\n")
        return EXIT_INPUT_ERROR
    if args.stdin:
        return _run_batch(args, stdin or sys.stdin, out, err)
    return _run_single(args, out, err, style)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
