"""Decimal string conversion for integers of any size.

CPython caps ``str(int)`` / ``int(str)`` at a few thousand digits by default;
power tables routinely exceed that (``3 ** 10000`` has 4772 digits).  These
helpers split the work so the cap never triggers, without touching the
interpreter-wide setting.
"""

from __future__ import annotations

_CHUNK = 1000


def to_decimal(n: int) -> str:
    if n < 0:
        return "-" + to_decimal(-n)
    try:
        return str(n)
    except ValueError:
        pass
    # split on a power of ten roughly half the digit count
    k = max(_CHUNK, (n.bit_length() * 3 // 10) // 2)
    hi, lo = divmod(n, 10**k)
    return to_decimal(hi) + to_decimal(lo).rjust(k, "0")


def from_decimal(s: str) -> int:
    s = s.strip()
    if not s:
        raise ValueError("empty decimal string")
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        return sign * from_decimal(s[1:])
    if not s.isascii() or not s.isdigit():
        raise ValueError(f"not a decimal integer: {s[:40]!r}")
    if len(s) <= _CHUNK:
        return int(s)
    k = len(s) // 2
    return from_decimal(s[:-k]) * 10**k + from_decimal(s[-k:])
