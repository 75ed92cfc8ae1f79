"""Stirling triangles, Bernoulli and Daehee numbers and polynomials.

Stirling triangles come from their recurrences; every other family is read
off a generating function through :mod:`daehee.fps`.  The Stirling-transform
expansions below give a second, independent route for the polynomial
families and are what :mod:`daehee.identities` compares against.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from . import fps
from .errors import DaeheeError
from .numerics import RationalLike


class TriangleKind(enum.Enum):
    STIRLING1_SIGNED = "stirling1"
    STIRLING2 = "stirling2"


class SequenceKind(enum.Enum):
    DAEHEE = "daehee"
    DAEHEE2 = "daehee2"
    BERNOULLI = "bernoulli"


@dataclass(frozen=True)
class Triangle:
    kind: TriangleKind
    rows: tuple

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __call__(self, n: int, l: int) -> Fraction:
        """Entry (n, l); zero outside 0 <= l <= n."""
        if n < 0 or n > self.n_max:
            raise DaeheeError(f"row {n} outside 0..{self.n_max}")
        if l < 0 or l > n:
            return Fraction(0)
        return self.rows[n][l]

    def row(self, n: int) -> tuple:
        return self.rows[n]


@dataclass(frozen=True)
class SequenceTable:
    kind: SequenceKind
    values: tuple

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def _check_n(n: int, name: str = "n") -> None:
    if n < 0:
        raise DaeheeError(f"{name} must be nonnegative, got {n}")


def _trunc_for(n: int, trunc: Optional[int]) -> int:
    if trunc is None:
        return n
    if n > trunc:
        raise DaeheeError(f"index {n} exceeds the truncation order {trunc}")
    return trunc


# -- Stirling numbers -------------------------------------------------------

def stirling1(n_max: int) -> Triangle:
    """Signed Stirling numbers of the first kind, coefficients of (x)_n."""
    _check_n(n_max, "n_max")
    rows: List[List[int]] = [[1]]
    for n in range(n_max):
        prev = rows[-1]
        new = [0] * (n + 2)
        for l in range(n + 2):
            a = prev[l - 1] if l >= 1 else 0
            b = prev[l] if l <= n else 0
            new[l] = a - n * b
        rows.append(new)
    return Triangle(
        TriangleKind.STIRLING1_SIGNED,
        tuple(tuple(Fraction(v) for v in r) for r in rows),
    )


def stirling2(n_max: int) -> Triangle:
    """Stirling numbers of the second kind (set partitions of n into l blocks)."""
    _check_n(n_max, "n_max")
    rows: List[List[int]] = [[1]]
    for n in range(n_max):
        prev = rows[-1]
        new = [0] * (n + 2)
        for l in range(n + 2):
            a = prev[l - 1] if l >= 1 else 0
            b = prev[l] if l <= n else 0
            new[l] = l * b + a
        rows.append(new)
    return Triangle(
        TriangleKind.STIRLING2,
        tuple(tuple(Fraction(v) for v in r) for r in rows),
    )


def stirling2_from_egf(l: int, m: int) -> Fraction:
    """S2(l, m) read off (e^t - 1)^m / m!.  Independent of the recurrence."""
    _check_n(l, "l")
    _check_n(m, "m")
    power = fps.series_pow(fps.build_expm1(l), m)
    return fps.egf_coeff(power, l) / math.factorial(m)


# -- Bernoulli --------------------------------------------------------------

def bernoulli_numbers(n_max: int) -> SequenceTable:
    """B_0..B_{n_max} from t/(e^t - 1); B_1 = -1/2."""
    _check_n(n_max, "n_max")
    gf = fps.build_t_over_expm1(n_max)
    return SequenceTable(
        SequenceKind.BERNOULLI, tuple(fps.egf_coeff(gf, n) for n in range(n_max + 1))
    )


def bernoulli_poly(n: int, x: RationalLike, bernoulli: Optional[SequenceTable] = None) -> Fraction:
    """B_n(x) = sum_k binom(n, k) B_k x^(n-k).

    ``bernoulli`` may carry precomputed Bernoulli numbers up to at least ``n``.
    """
    _check_n(n)
    x = Fraction(x)
    B = bernoulli if bernoulli is not None and bernoulli.n_max >= n else bernoulli_numbers(n)
    return sum((math.comb(n, k) * B[k] * x ** (n - k) for k in range(n + 1)), Fraction(0))


def norlund_series(alpha: int, x: RationalLike, T: int) -> fps.TruncatedSeries:
    """(t/(e^t - 1))^alpha * e^{xt} to order T."""
    base = fps.series_pow(fps.build_t_over_expm1(T), alpha)
    return fps.series_mul(base, fps.build_exp_scaled(x, T))


def bernoulli_higher(n: int, alpha: int, x: RationalLike, trunc: Optional[int] = None) -> Fraction:
    """Order-``alpha`` Bernoulli polynomial B_n^(alpha)(x), any integer alpha."""
    _check_n(n)
    T = _trunc_for(n, trunc)
    return fps.egf_coeff(norlund_series(alpha, x, T), n)


# -- Daehee, first kind ------------------------------------------------------

def daehee_gf(x: RationalLike, T: int) -> fps.TruncatedSeries:
    """(log(1+t)/t) (1+t)^x."""
    return fps.series_mul(fps.build_log1p_over_t(T), fps.build_binomial_pow(x, T))


def daehee_numbers(n_max: int) -> SequenceTable:
    _check_n(n_max, "n_max")
    gf = fps.build_log1p_over_t(n_max)
    return SequenceTable(
        SequenceKind.DAEHEE, tuple(fps.egf_coeff(gf, n) for n in range(n_max + 1))
    )


def daehee_poly(n: int, x: RationalLike, trunc: Optional[int] = None) -> Fraction:
    """D_n(x), the EGF coefficient of (log(1+t)/t)(1+t)^x."""
    _check_n(n)
    return fps.egf_coeff(daehee_gf(x, _trunc_for(n, trunc)), n)


# -- Daehee, second kind -----------------------------------------------------

def daehee2_gf(x: RationalLike, T: int) -> fps.TruncatedSeries:
    """((1+t) log(1+t)/t) (1+t)^(-x)."""
    base = fps.series_mul(fps.build_binomial_pow(1, T), fps.build_log1p_over_t(T))
    return fps.series_mul(base, fps.build_binomial_pow(-Fraction(x), T))


def daehee2_numbers(n_max: int) -> SequenceTable:
    _check_n(n_max, "n_max")
    gf = daehee2_gf(0, n_max)
    return SequenceTable(
        SequenceKind.DAEHEE2, tuple(fps.egf_coeff(gf, n) for n in range(n_max + 1))
    )


def daehee2_poly(n: int, x: RationalLike, trunc: Optional[int] = None) -> Fraction:
    """D^_n(x), the EGF coefficient of ((1+t) log(1+t)/t)(1+t)^(-x)."""
    _check_n(n)
    return fps.egf_coeff(daehee2_gf(x, _trunc_for(n, trunc)), n)


# -- Stirling-transform coefficient vectors ----------------------------------

def daehee_poly_coeffs(n: int, s1: Optional[Triangle] = None) -> List[Fraction]:
    """Coefficients of D_n(x) in powers of x, from sum_l S1(n, l) B_l(x)."""
    return _stirling_bernoulli_coeffs(n, s1, sign=1)


def daehee2_poly_coeffs(n: int, s1: Optional[Triangle] = None) -> List[Fraction]:
    """Coefficients of D^_n(x) in powers of x, from sum_l (-1)^l S1(n, l) B_l(x)."""
    return _stirling_bernoulli_coeffs(n, s1, sign=-1)


def _stirling_bernoulli_coeffs(n: int, s1: Optional[Triangle], sign: int) -> List[Fraction]:
    _check_n(n)
    S1 = s1 if s1 is not None and s1.n_max >= n else stirling1(n)
    B = bernoulli_numbers(n)
    out = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        c = S1(n, l) * sign ** l
        if c == 0:
            continue
        # B_l(x) = sum_j binom(l, j) B_{l-j} x^j
        for j in range(l + 1):
            out[j] += c * math.comb(l, j) * B[l - j]
    return out


def eval_poly(coeffs, x: RationalLike) -> Fraction:
    """Horner evaluation of ascending coefficients."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
