"""Formal elliptic spaces as pairs of finite rank tables.

A space is modelled only by its rational homotopy ranks (degrees >= 1) and
rational homology ranks (degrees >= 0).  Every invariant computed downstream
depends on nothing else.
"""

from __future__ import annotations

import enum
import warnings
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

from .poly import Polynomial, poly_mul, poly_pow

__all__ = [
    "EllipticRanks",
    "Strictness",
    "InvalidRanksError",
    "LiteralError",
    "MirrorWarning",
    "DEGREE_CAP",
    "MAX_POWER_EXPONENT",
    "sphere",
    "point",
    "product",
    "power",
    "from_literal",
]

#: Largest degree accepted in a user-supplied rank table.
DEGREE_CAP = 10**6
#: Largest exponent accepted by :func:`power` for a base with homology beyond degree 0.
MAX_POWER_EXPONENT = 10**4


class Strictness(str, enum.Enum):
    STRICT = "strict"
    PERMISSIVE = "permissive"


class InvalidRanksError(ValueError):
    """A rank table violates a structural invariant of elliptic spaces."""


class LiteralError(InvalidRanksError):
    """A user-supplied rank table was rejected."""


class MirrorWarning(UserWarning):
    """The table fails chi_pi <= 0 <= chi, so no simply connected elliptic space has it."""


def _freeze(ranks: Mapping[int, int], min_degree: int, what: str) -> Mapping[int, int]:
    out = {}
    for deg, rank in ranks.items():
        if isinstance(deg, bool) or not isinstance(deg, int):
            raise InvalidRanksError(f"{what} degree must be an int, got {deg!r}")
        if isinstance(rank, bool) or not isinstance(rank, int):
            raise InvalidRanksError(f"{what} rank must be an int, got {rank!r}")
        if deg < min_degree:
            raise InvalidRanksError(f"{what} degree {deg} is below {min_degree}")
        if rank < 0:
            raise InvalidRanksError(f"{what} rank at degree {deg} is negative ({rank})")
        if rank:
            out[deg] = rank
    return MappingProxyType(dict(sorted(out.items())))


@dataclass(frozen=True, eq=False)
class EllipticRanks:
    """Rational homotopy and homology ranks of a formal elliptic space.

    Equality compares the two rank tables only; ``label`` is display text.
    """

    homotopy_ranks: Mapping[int, int]
    homology_ranks: Mapping[int, int]
    label: str = field(default="")

    def __post_init__(self):
        pi = _freeze(self.homotopy_ranks, 1, "homotopy")
        h = _freeze(self.homology_ranks, 0, "homology")
        if h.get(0) != 1:
            raise InvalidRanksError(
                f"homology rank in degree 0 must be 1 (path-connected), got {h.get(0, 0)}"
            )
        if sum(h.values()) == 1 and pi:
            raise InvalidRanksError(
                "H-rank 1 forces π-rank 0: a space with one-dimensional rational homology "
                "is rationally a point, so all rational homotopy vanishes"
            )
        object.__setattr__(self, "homotopy_ranks", pi)
        object.__setattr__(self, "homology_ranks", h)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EllipticRanks):
            return NotImplemented
        return (
            self.homotopy_ranks == other.homotopy_ranks
            and self.homology_ranks == other.homology_ranks
        )

    def __hash__(self) -> int:
        return hash((tuple(self.homotopy_ranks.items()), tuple(self.homology_ranks.items())))

    @property
    def pi_total(self) -> int:
        return sum(self.homotopy_ranks.values())

    @property
    def h_total(self) -> int:
        return sum(self.homology_ranks.values())

    @property
    def simply_connected(self) -> bool:
        return 1 not in self.homotopy_ranks

    @property
    def homotopy_polynomial(self) -> Polynomial:
        return Polynomial._trusted(dict(self.homotopy_ranks))

    @property
    def homology_polynomial(self) -> Polynomial:
        return Polynomial._trusted(dict(self.homology_ranks))

    def to_json(self) -> dict:
        return {
            "pi": {str(d): r for d, r in self.homotopy_ranks.items()},
            "h": {str(d): r for d, r in self.homology_ranks.items()},
            "label": self.label,
        }

    @classmethod
    def from_json(cls, obj: Mapping, strictness: Strictness | str = Strictness.STRICT) -> EllipticRanks:
        """Build from ``{"pi": {...}, "h": {...}, "label": ...}`` through :func:`from_literal`."""
        try:
            pi = {int(k): v for k, v in obj["pi"].items()}
            h = {int(k): v for k, v in obj["h"].items()}
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            raise LiteralError(f"malformed literal JSON: {exc}") from None
        for table in (obj["pi"], obj["h"]):
            if any(v == 0 for v in table.values()):
                raise LiteralError("zero ranks must be omitted from literal JSON")
        return from_literal(pi, h, strictness, label=obj.get("label"))


def sphere(n: int) -> EllipticRanks:
    """Rank tables of the n-sphere.

    Odd spheres have one rational homotopy group, in degree n; even spheres
    have two, in degrees n and 2n - 1.
    """
    if n < 1:
        raise InvalidRanksError(f"sphere dimension must be >= 1, got {n}")
    if n % 2:
        pi = {n: 1}
    else:
        pi = {n: 1, 2 * n - 1: 1}
    return EllipticRanks(pi, {0: 1, n: 1}, label=f"S{n}")


def point() -> EllipticRanks:
    return EllipticRanks({}, {0: 1}, label="pt")


def _wrap(label: str) -> str:
    return f"({label})" if (" " in label) else label


def product(xs: Sequence[EllipticRanks]) -> EllipticRanks:
    """Cartesian product: homotopy ranks add degreewise, homology polynomials multiply."""
    xs = list(xs)
    if not xs:
        raise ValueError("product of an empty list; use point() for the one-point space")
    if len(xs) == 1:
        return xs[0]
    pi: dict[int, int] = {}
    h = Polynomial.one()
    for x in xs:
        for deg, r in x.homotopy_ranks.items():
            pi[deg] = pi.get(deg, 0) + r
        h = poly_mul(h, x.homology_polynomial)
    label = " x ".join(_wrap(x.label) for x in xs)
    return EllipticRanks(pi, dict(h.terms), label=label)


def power(x: EllipticRanks, n: int) -> EllipticRanks:
    """The n-fold product of ``x`` with itself; ``power(x, 0)`` is the point."""
    if n < 0:
        raise ValueError(f"negative power {n}")
    if n == 0:
        return point()
    if n == 1:
        return x
    if x.h_total == 1:
        return EllipticRanks({}, {0: 1}, label=f"{_wrap(x.label)}^{n}")
    if n > MAX_POWER_EXPONENT:
        raise ValueError(f"power exponent {n} exceeds the limit {MAX_POWER_EXPONENT}")
    pi = {deg: n * r for deg, r in x.homotopy_ranks.items()}
    h = poly_pow(x.homology_polynomial, n)
    return EllipticRanks(pi, dict(h.terms), label=f"{_wrap(x.label)}^{n}")


def from_literal(
    pi_ranks: Mapping[int, int],
    h_ranks: Mapping[int, int],
    strictness: Strictness | str = Strictness.STRICT,
    *,
    label: str | None = None,
    abelian_pi1: bool = False,
) -> EllipticRanks:
    """Validate a user-supplied pair of rank tables.

    Hard errors: negative ranks or degrees, degrees above :data:`DEGREE_CAP`,
    ``h_ranks[0] != 1``, and total homology rank 1 with nonzero homotopy.

    Strict mode additionally rejects rank in homotopy degree 1 (unless
    ``abelian_pi1`` acknowledges an abelian fundamental group) and tables
    with more homotopy than homology.  A table that fails
    ``chi_pi <= 0 <= chi`` is accepted with a :class:`MirrorWarning`.
    """
    strictness = Strictness(strictness)
    for what, table in (("homotopy", pi_ranks), ("homology", h_ranks)):
        for deg in table:
            if isinstance(deg, int) and deg > DEGREE_CAP:
                raise LiteralError(f"{what} degree {deg} exceeds the cap {DEGREE_CAP}")
    try:
        x = EllipticRanks(pi_ranks, h_ranks, label="")
    except InvalidRanksError as exc:
        raise LiteralError(str(exc)) from None

    if strictness is Strictness.STRICT:
        if not x.simply_connected and not abelian_pi1:
            raise LiteralError(
                "homotopy rank in degree 1 requires an abelian fundamental group; "
                "use permissive mode to accept it"
            )
        if x.pi_total > x.h_total:
            raise LiteralError(
                f"total homotopy rank {x.pi_total} exceeds total homology rank {x.h_total}; "
                "use permissive mode for Hilali-violating tables"
            )

    chi = x.homology_polynomial(-1)
    chi_pi = x.homotopy_polynomial(-1)
    if not (chi_pi <= 0 <= chi):
        warnings.warn(
            f"chi_pi = {chi_pi}, chi = {chi}: no simply connected elliptic space has these ranks",
            MirrorWarning,
            stacklevel=2,
        )
    if label is None:
        label = _literal_label(x)
    return EllipticRanks(x.homotopy_ranks, x.homology_ranks, label=label)


def _literal_label(x: EllipticRanks) -> str:
    pi = ", ".join(f"{d}: {r}" for d, r in x.homotopy_ranks.items())
    h = ", ".join(f"{d}: {r}" for d, r in x.homology_ranks.items())
    return f"{{pi: {{{pi}}}, h: {{{h}}}}}"
