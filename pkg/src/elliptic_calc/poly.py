"""Sparse one-variable polynomials with nonnegative integer coefficients.

These are generating functions of rank tables: the coefficient of ``t**i``
is the rank in degree ``i``.  Values are immutable; every operation returns a
new polynomial and never stores a zero coefficient.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from types import MappingProxyType

from ._decimal import from_decimal, to_decimal

# longest dense coefficient array the power recurrence may allocate
_DENSE_POW_LIMIT = 10**7

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_mul",
    "poly_eval",
    "poly_pow",
]


class Polynomial:
    """Polynomial in ``t`` stored as a map ``degree -> coefficient``.

    >>> p = Polynomial({2: 1, 0: 1})
    >>> str(p * p)
    't^4 + 2*t^2 + 1'
    >>> p(1), p(-1)
    (2, 2)
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for deg, coeff in items:
            if isinstance(deg, bool) or not isinstance(deg, int):
                raise TypeError(f"degree must be an int, got {deg!r}")
            if isinstance(coeff, bool) or not isinstance(coeff, int):
                raise TypeError(f"coefficient must be an int, got {coeff!r}")
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            if coeff < 0:
                raise ValueError(f"negative coefficient {coeff} at degree {deg}")
            if coeff:
                clean[deg] = clean.get(deg, 0) + coeff
        self._terms = MappingProxyType(dict(sorted(clean.items())))

    @classmethod
    def _trusted(cls, terms: dict[int, int]) -> Polynomial:
        # caller guarantees nonnegative int keys and strictly positive int values
        p = cls.__new__(cls)
        p._terms = MappingProxyType(dict(sorted(terms.items())))
        return p

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._trusted({})

    @classmethod
    def one(cls) -> Polynomial:
        return cls._trusted({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        return cls({degree: coeff})

    @property
    def terms(self) -> Mapping[int, int]:
        """Read-only view of the nonzero terms, ascending by degree."""
        return self._terms

    def coeff(self, degree: int) -> int:
        return self._terms.get(degree, 0)

    @property
    def degree(self) -> int | None:
        """Highest degree with a nonzero coefficient; ``None`` for zero."""
        return max(self._terms) if self._terms else None

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_mul(self, other)

    def __pow__(self, n: int) -> Polynomial:
        return poly_pow(self, n)

    def __call__(self, t: int) -> int:
        return poly_eval(self, t)

    def __repr__(self) -> str:
        return f"Polynomial({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for deg, c in sorted(self._terms.items(), reverse=True):
            if deg == 0:
                parts.append(to_decimal(c))
                continue
            mono = "t" if deg == 1 else f"t^{deg}"
            parts.append(mono if c == 1 else f"{to_decimal(c)}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict[str, str]:
        """JSON form: decimal-string degree -> decimal-string coefficient, descending."""
        return {str(d): to_decimal(c) for d, c in sorted(self._terms.items(), reverse=True)}

    @classmethod
    def from_json(cls, obj: Mapping[str, str | int]) -> Polynomial:
        terms = {}
        for k, v in obj.items():
            deg = from_decimal(str(k))
            coeff = v if isinstance(v, int) and not isinstance(v, bool) else from_decimal(str(v))
            if deg in terms:
                raise ValueError(f"duplicate degree {deg}")
            terms[deg] = coeff
        return cls(terms)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    out = dict(p._terms)
    for deg, c in q._terms.items():
        out[deg] = out.get(deg, 0) + c
    return Polynomial._trusted(out)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if len(p) > len(q):
        p, q = q, p
    out: dict[int, int] = {}
    q_items = list(q._terms.items())
    for di, ci in p._terms.items():
        for dj, cj in q_items:
            d = di + dj
            out[d] = out.get(d, 0) + ci * cj
    return Polynomial._trusted(out)


def poly_eval(p: Polynomial, t: int) -> int:
    if t == 1:
        return sum(p._terms.values())
    if t == -1:
        return sum(-c if d & 1 else c for d, c in p._terms.items())
    if t == 0:
        return p._terms.get(0, 0)
    # Horner over the sparse support, descending
    acc = 0
    prev = None
    for deg, c in sorted(p._terms.items(), reverse=True):
        if prev is not None:
            acc *= t ** (prev - deg)
        acc += c
        prev = deg
    if prev:
        acc *= t**prev
    return acc


def poly_pow(p: Polynomial, n: int) -> Polynomial:
    if n < 0:
        raise ValueError(f"negative exponent {n}")
    if n == 0:
        return Polynomial.one()
    if n == 1 or len(p) <= 1:
        # monomials and zero: (c t^d)^n = c^n t^(dn)
        return Polynomial._trusted({d * n: c**n for d, c in p._terms.items()})
    low = min(p._terms)
    g = 0
    for d in p._terms:
        g = math.gcd(g, d - low)
    span = (max(p._terms) - low) // g
    if n * span <= _DENSE_POW_LIMIT:
        return _pow_recurrence(p, n, low, g, span)
    return _pow_squaring(p, n)


def _pow_recurrence(p: Polynomial, n: int, low: int, g: int, span: int) -> Polynomial:
    # Write p = t^low * f(t^g) with f(0) = a0 != 0, and q = f^n.  From
    # f q' = n f' q:  m a0 q_m = sum_{j=1..min(m,span)} ((n + 1) j - m) a_j q_{m-j}.
    a = [0] * (span + 1)
    for d, c in p._terms.items():
        a[(d - low) // g] = c
    a0 = a[0]
    support = [(j, a[j]) for j in range(1, span + 1) if a[j]]
    length = n * span + 1
    q = [0] * length
    q[0] = a0**n
    for m in range(1, length):
        acc = 0
        for j, aj in support:
            if j > m:
                break
            qm = q[m - j]
            if qm:
                acc += ((n + 1) * j - m) * aj * qm
        q[m] = acc // (m * a0)
    shift = low * n
    return Polynomial._trusted({shift + g * m: c for m, c in enumerate(q) if c})


def _pow_squaring(p: Polynomial, n: int) -> Polynomial:
    result = Polynomial.one()
    base = p
    while n:
        if n & 1:
            result = poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result
