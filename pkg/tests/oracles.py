"""Independent reference computations used as test oracles.

Nothing here imports the package's arithmetic: polynomials are dense
coefficient lists and products are computed by the schoolbook double loop.
"""

from __future__ import annotations


def dense(terms: dict[int, int]) -> list[int]:
    if not terms:
        return []
    out = [0] * (max(terms) + 1)
    for d, c in terms.items():
        out[d] += c
    return out


def sparse(coeffs: list[int]) -> dict[int, int]:
    return {d: c for d, c in enumerate(coeffs) if c}


def convolve(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    """Brute-force product over all degree pairs."""
    a, b = dense(p), dense(q)
    if not a or not b:
        return {}
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return sparse(out)


def repeated(p: dict[int, int], n: int) -> dict[int, int]:
    out = {0: 1}
    for _ in range(n):
        out = convolve(out, p)
    return out


def evaluate(p: dict[int, int], t: int) -> int:
    return sum(c * t**d for d, c in p.items())


def least_n(pred, cap: int = 10_000) -> int:
    for n in range(1, cap + 1):
        if pred(n):
            return n
    raise AssertionError("no n found below cap")
