"""Exact rational scalars, p-adic valuations and factorial-type products.

Every quantity in the package is a :class:`fractions.Fraction`.  Fractions are
kept in lowest terms with a positive denominator by construction, which is the
canonical form all text output relies on.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from typing import Union

from .errors import DaeheeError, InvalidPrimeError, ParseError, RationalDivisionError

Rational = Fraction
RationalLike = Union[Fraction, int]

#: Valuation of zero.  Compares greater than every integer.
INFINITY = math.inf

Valuation = Union[int, float]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise DaeheeError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    if op == "div" and b == 0:
        raise RationalDivisionError(f"division of {format_rational(Fraction(a))} by zero")
    return Fraction(fn(Fraction(a), Fraction(b)))


def format_rational(q: RationalLike) -> str:
    """Canonical text: ``"a/b"`` with ``b >= 2``, or ``"a"`` when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"-a/b"``-style text.  Whitespace, decimals and ``b = 0`` are rejected."""
    if not isinstance(text, str) or _RATIONAL_RE.fullmatch(text) is None:
        raise ParseError(f"not a rational literal: {text!r} (expected e.g. 3, -2, 1/2, -3/7)")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(a: RationalLike, p: int) -> Valuation:
    """Exponent of ``p`` in ``a``; :data:`INFINITY` when ``a == 0``.

    >>> padic_valuation(Fraction(3, 4), 2)
    -2
    """
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")
    a = Fraction(a)
    if a == 0:
        return INFINITY
    return _int_valuation(a.numerator, p) - _int_valuation(a.denominator, p)


def format_valuation(v: Valuation) -> str:
    return "inf" if v == INFINITY else str(v)


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """x(x-1)...(x-n+1); the empty product for n = 0."""
    if n < 0:
        raise DaeheeError(f"falling factorial needs n >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for j in range(n):
        out *= x - j
    return out


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """x(x+1)...(x+n-1); the empty product for n = 0."""
    if n < 0:
        raise DaeheeError(f"rising factorial needs n >= 0, got {n}")
    x = Fraction(x)
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def binomial(x: RationalLike, n: int) -> Fraction:
    """Generalized binomial coefficient (x)_n / n! for rational x."""
    if n < 0:
        raise DaeheeError(f"binomial needs n >= 0, got {n}")
    return falling_factorial(x, n) / math.factorial(n)
