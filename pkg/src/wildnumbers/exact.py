"""Exact arithmetic core: nonnegative big integers, canonical rationals,
and the base-10 digit sum.

Everything here is exact and immutable.  Values are plain Python ints
(arbitrary precision), so there is no overflow at any magnitude; the
domain is restricted to nonnegative numbers because digit sums of
negatives are undefined.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

# CPython refuses int<->str conversions beyond sys.get_int_max_str_digits()
# (>= 640 on every supported configuration).  All decimal work on large
# values therefore goes through chunks of at most _CHUNK_DIGITS digits,
# which stays legal no matter how low that interpreter limit is set.
_CHUNK_DIGITS = 500
_CHUNK_BASE = 10**_CHUNK_DIGITS


def digit_sum(n: int) -> int:
    """Sum of the base-10 digits of n; digit_sum(n) == 0 iff n == 0."""
    if n < 0:
        raise ValueError("digit sum is undefined for negative numbers")
    total = 0
    while n >= _CHUNK_BASE:
        n, rem = divmod(n, _CHUNK_BASE)
        s = str(rem)
        total += sum(map(ord, s)) - 48 * len(s)
    s = str(n)
    return total + sum(map(ord, s)) - 48 * len(s)


def format_natural(n: int) -> str:
    """Decimal string of a nonnegative int, safe at any magnitude."""
    if n < 0:
        raise ValueError("negative values are outside the domain")
    if n < _CHUNK_BASE:
        return str(n)
    parts = []
    while n >= _CHUNK_BASE:
        n, rem = divmod(n, _CHUNK_BASE)
        parts.append(str(rem).zfill(_CHUNK_DIGITS))
    parts.append(str(n))
    return "".join(reversed(parts))


def parse_natural(text: str) -> int:
    """Parse a decimal string as a nonnegative int, safe at any length."""
    s = text.strip()
    if not s or not s.isascii() or not s.isdigit():
        raise ValueError(f"not a nonnegative decimal integer: {text!r}")
    value = 0
    for i in range(0, len(s), _CHUNK_DIGITS):
        chunk = s[i : i + _CHUNK_DIGITS]
        value = value * 10 ** len(chunk) + int(chunk)
    return value


@dataclass(frozen=True, slots=True)
class Rational:
    """A canonical fraction of nonnegative ints: den >= 1, gcd(num, den) == 1.

    Construct through make_rational(), which reduces to lowest terms;
    direct construction of a non-canonical pair raises.  Zero is 0/1.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num < 0 or self.den < 0:
            raise ValueError("negative values are outside the domain")
        if self.den == 0:
            raise ValueError("zero denominator")
        if gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in lowest terms")

    def __str__(self) -> str:
        return format_rational(self)


def make_rational(p: int, q: int) -> Rational:
    """Reduce p/q (q >= 1) to the unique canonical form."""
    if p < 0 or q < 0:
        raise ValueError("negative values are outside the domain")
    if q == 0:
        raise ValueError("zero denominator")
    g = gcd(p, q)  # p == 0 gives g == q, so 0/q canonicalizes to 0/1
    return Rational(p // g, q // g)


def is_integer(r: Rational) -> bool:
    """True iff r is a whole number (denominator 1)."""
    return r.den == 1


def format_rational(r: Rational) -> str:
    """Canonical "p/q" form; integers print without the "/1"."""
    if r.den == 1:
        return format_natural(r.num)
    return f"{format_natural(r.num)}/{format_natural(r.den)}"


def parse_rational(text: str) -> Rational:
    """Parse "p/q" or a bare integer into canonical form."""
    s = text.strip()
    if "/" in s:
        p_text, q_text = s.split("/", 1)
        return make_rational(parse_natural(p_text), parse_natural(q_text))
    return make_rational(parse_natural(s), 1)
