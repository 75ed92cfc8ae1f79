"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` of order ``T`` stores the coefficients of
``t**0 .. t**T``.  Combining series of different orders is an error; call
:meth:`TruncatedSeries.truncate` first if that is really intended.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DaeheeError, NonUnitSeriesError, TruncationMismatchError
from .numerics import RationalLike, binomial

DEFAULT_TRUNC = 32


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise DaeheeError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        """Truncation order T; the series holds T + 1 coefficients."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        from .numerics import format_rational

        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}])"

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order``.  Raising the order is not allowed."""
        if order > self.order:
            raise TruncationMismatchError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1])

    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_sub(self, other)
        return NotImplemented

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return series_pow(self, e)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise TruncationMismatchError(
            f"truncation orders differ: {a.order} vs {b.order}"
        )


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(x + y for x, y in zip(a.coeffs, b.coeffs))


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(x - y for x, y in zip(a.coeffs, b.coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common order."""
    _check_orders(a, b)
    T = a.order
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (T + 1)
    for i, x in enumerate(ac):
        if x == 0:
            continue
        for j in range(T + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(out)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a unit series.

    Solves ``sum_{j<=k} a_j b_{k-j} = [k == 0]`` for ``b_k`` one coefficient at
    a time.
    """
    if not a.is_unit():
        raise NonUnitSeriesError("series with zero constant term has no inverse")
    ac = a.coeffs
    inv0 = 1 / ac[0]
    out = [inv0]
    for k in range(1, a.order + 1):
        s = sum((ac[j] * out[k - j] for j in range(1, k + 1) if ac[j]), Fraction(0))
        out.append(-s * inv0)
    return TruncatedSeries(out)


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """``a**e`` for any integer ``e``; negative powers need a unit series."""
    if e < 0:
        if not a.is_unit():
            raise NonUnitSeriesError(
                f"negative power {e} of a series with zero constant term"
            )
        a = series_inverse(a)
        e = -e
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_shift_down(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Divide by ``t**k``.  The result has order ``a.order - k``."""
    if k < 0:
        raise DaeheeError(f"shift must be nonnegative, got {k}")
    if k > a.order:
        raise TruncationMismatchError(f"cannot shift a series of order {a.order} down by {k}")
    low = a.coeffs[:k]
    if any(c != 0 for c in low):
        raise DaeheeError(f"cannot divide by t**{k}: low-order coefficients are {list(map(str, low))}")
    return TruncatedSeries(a.coeffs[k:])


def series_shift_up(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by ``t**k`` keeping the truncation order."""
    T = a.order
    return TruncatedSeries([0] * min(k, T + 1) + list(a.coeffs[: max(T + 1 - k, 0)]))


def one(T: int) -> TruncatedSeries:
    return TruncatedSeries([1] + [0] * T)


def zero(T: int) -> TruncatedSeries:
    return TruncatedSeries([0] * (T + 1))


def monomial(k: int, T: int, c: RationalLike = 1) -> TruncatedSeries:
    coeffs = [Fraction(0)] * (T + 1)
    if k <= T:
        coeffs[k] = Fraction(c)
    return TruncatedSeries(coeffs)


def from_coeffs(coeffs: Sequence[RationalLike], T: int) -> TruncatedSeries:
    """Pad or cut a coefficient list to order ``T``."""
    cs = list(coeffs)[: T + 1]
    return TruncatedSeries(cs + [0] * (T + 1 - len(cs)))


def build_log1p(T: int) -> TruncatedSeries:
    """log(1 + t) = t - t^2/2 + t^3/3 - ..."""
    return TruncatedSeries([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, T + 1)])


def build_expm1(T: int) -> TruncatedSeries:
    """e^t - 1."""
    return TruncatedSeries([0] + [Fraction(1, math.factorial(n)) for n in range(1, T + 1)])


def build_exp_scaled(x: RationalLike, T: int) -> TruncatedSeries:
    """e^{xt}."""
    x = Fraction(x)
    coeffs = [Fraction(1)]
    for n in range(1, T + 1):
        coeffs.append(coeffs[-1] * x / n)
    return TruncatedSeries(coeffs)


def build_binomial_pow(x: RationalLike, T: int) -> TruncatedSeries:
    """(1 + t)^x = sum binom(x, n) t^n."""
    return TruncatedSeries(binomial(x, n) for n in range(T + 1))


def build_log1p_over_t(T: int) -> TruncatedSeries:
    """log(1 + t)/t, the Daehee generating function at x = 0."""
    return series_shift_down(build_log1p(T + 1), 1)


def build_t_over_expm1(T: int) -> TruncatedSeries:
    """t/(e^t - 1), the Bernoulli generating function."""
    return series_inverse(series_shift_down(build_expm1(T + 1), 1))


def egf_coeff(a: TruncatedSeries, n: int) -> Fraction:
    """``n! * [t^n] a``."""
    if not 0 <= n <= a.order:
        raise DaeheeError(f"coefficient index {n} outside 0..{a.order}")
    return a.coeffs[n] * math.factorial(n)
