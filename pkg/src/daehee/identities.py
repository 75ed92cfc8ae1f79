"""Catalog of Daehee/Bernoulli/Stirling identities checked to exact equality.

Each entry evaluates both sides of one identity for every index up to
``n_max`` (and every sample point, for identities in ``x``) and records
per-instance verdicts.  There are no tolerances: an instance passes only if
the two rationals are equal.

Notes on the catalog:

* ``thm7-inverse`` sums ``D^_n(x) S2(m, n)`` over ``n``.  One printed form of
  this identity indexes the Daehee factor by ``m`` instead of ``n``; the
  summation index used here is the one its derivation produces.
* The reciprocity relations in ``thm8-reciprocal`` start their sums at
  ``m = 1``, so there is no ``n = 0`` instance.
* One printed step towards the second reciprocity relation integrates over
  ``[0, 1]`` rather than over Z_p.  Only the Z_p version is meaningful for
  this package and only that one is checked (see :mod:`daehee.padic`).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import fps
from .errors import DaeheeError, UnknownIdentityError
from .numerics import RationalLike, falling_factorial, format_rational, rising_factorial
from .sequences import (
    bernoulli_numbers,
    bernoulli_poly,
    daehee2_gf,
    daehee_gf,
    stirling1,
    stirling2,
)

EQ11_EXPONENTS = (-2, -1, 0, 1, 2, 3)


@dataclass(frozen=True)
class Instance:
    params: Tuple[Tuple[str, object], ...]
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        d = {k: format_rational(v) if isinstance(v, Fraction) else v for k, v in self.params}
        d["lhs"] = format_rational(self.lhs)
        d["rhs"] = format_rational(self.rhs)
        return d


@dataclass
class IdentityCheck:
    id: str
    description: str
    n_max: int
    x_samples: List[Fraction]
    instances: List[Instance] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(inst.passed for inst in self.instances)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    @property
    def failures(self) -> List[Instance]:
        return [inst for inst in self.instances if not inst.passed]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "n_max": self.n_max,
            "x_samples": [format_rational(x) for x in self.x_samples],
            "status": self.status,
            "instances": len(self.instances),
            "failures": [inst.to_dict() for inst in self.failures],
        }


class _Context:
    """Tables shared by the checks of one ``verify`` call."""

    def __init__(self, n_max: int, trunc: int):
        self.n_max = n_max
        self.T = trunc
        self.S1 = stirling1(n_max)
        self.S2 = stirling2(n_max)
        self.B = bernoulli_numbers(n_max)
        self._egf: Dict[tuple, List[Fraction]] = {}
        self._bgf = fps.build_t_over_expm1(trunc)
        self._norlund_base: Dict[int, fps.TruncatedSeries] = {}

    def _egfs(self, key: tuple, build: Callable[[], fps.TruncatedSeries]) -> List[Fraction]:
        if key not in self._egf:
            s = build()
            self._egf[key] = [fps.egf_coeff(s, k) for k in range(self.n_max + 1)]
        return self._egf[key]

    def D(self, n: int, x: Fraction = Fraction(0)) -> Fraction:
        return self._egfs(("D", x), lambda: daehee_gf(x, self.T))[n]

    def D2(self, n: int, x: Fraction = Fraction(0)) -> Fraction:
        return self._egfs(("D2", x), lambda: daehee2_gf(x, self.T))[n]

    def Bx(self, n: int, x: Fraction) -> Fraction:
        return bernoulli_poly(n, x, self.B)

    def norlund(self, n: int, alpha: int, x: Fraction) -> Fraction:
        """B_n^(alpha)(x) as n! [t^n] of (t/(e^t-1))^alpha e^{xt}.

        Only the n-th coefficient of the product is formed; the powers of
        t/(e^t-1) are cached per alpha.
        """
        base = self._norlund_base.get(alpha)
        if base is None:
            base = fps.series_pow(self._bgf, alpha)
            self._norlund_base[alpha] = base
        x = Fraction(x)
        total = Fraction(0)
        x_pow = Fraction(1)
        for j in range(n, -1, -1):
            total += base[j] * x_pow / math.factorial(n - j)
            x_pow *= x
        return total * math.factorial(n)


Checker = Callable[[_Context, Sequence[Fraction]], Iterator[Instance]]


def _inst(lhs, rhs, **params) -> Instance:
    return Instance(tuple(params.items()), Fraction(lhs), Fraction(rhs))


def _thm1_stirling(c: _Context, xs):
    for n in range(c.n_max + 1):
        rhs = sum((c.S1(n, l) * c.B[l] for l in range(n + 1)), Fraction(0))
        yield _inst(c.D(n), rhs, n=n)


def _cor3_stirling(c: _Context, xs):
    for x in xs:
        for n in range(c.n_max + 1):
            rhs = sum((c.S1(n, l) * c.Bx(l, x) for l in range(n + 1)), Fraction(0))
            yield _inst(c.D(n, x), rhs, n=n, x=x)


def _thm2_norlund(c: _Context, xs):
    for x in xs:
        for n in range(c.n_max + 1):
            yield _inst(c.D(n, x), c.norlund(n, n + 2, x + 1), n=n, x=x)


def _thm4_inverse(c: _Context, xs):
    for m in range(c.n_max + 1):
        rhs = sum((c.D(n) * c.S2(m, n) for n in range(m + 1)), Fraction(0))
        yield _inst(c.B[m], rhs, m=m)


def _rem_thm4_poly(c: _Context, xs):
    for x in xs:
        for m in range(c.n_max + 1):
            rhs = sum((c.D(n, x) * c.S2(m, n) for n in range(m + 1)), Fraction(0))
            yield _inst(c.Bx(m, x), rhs, m=m, x=x)


def _thm5_stirling(c: _Context, xs):
    for n in range(c.n_max + 1):
        rhs = sum((c.S1(n, l) * (-1) ** l * c.B[l] for l in range(n + 1)), Fraction(0))
        yield _inst(c.D2(n), rhs, n=n)


def _thm6_stirling(c: _Context, xs):
    for x in xs:
        for n in range(c.n_max + 1):
            rhs = sum((c.S1(n, l) * (-1) ** l * c.Bx(l, x) for l in range(n + 1)), Fraction(0))
            yield _inst(c.D2(n, x), rhs, n=n, x=x)


def _thm7_inverse(c: _Context, xs):
    for x in xs:
        for m in range(c.n_max + 1):
            rhs = sum((c.D2(n, x) * c.S2(m, n) for n in range(m + 1)), Fraction(0))
            yield _inst(c.Bx(m, 1 - x), rhs, m=m, x=x)


def _thm7_reflection(c: _Context, xs):
    for x in xs:
        for m in range(c.n_max + 1):
            yield _inst(c.Bx(m, 1 - x), (-1) ** m * c.Bx(m, x), m=m, x=x)


def _rem_thm7_norlund(c: _Context, xs):
    for n in range(c.n_max + 1):
        yield _inst(c.D2(n), c.norlund(n, n + 2, Fraction(2)), n=n)
    for x in xs:
        for n in range(c.n_max + 1):
            yield _inst(c.D2(n, x), c.norlund(n, n + 2, 2 - x), n=n, x=x)


def _thm8_reciprocal(c: _Context, xs):
    f = math.factorial
    for n in range(1, c.n_max + 1):
        rhs = sum(
            (math.comb(n - 1, m - 1) * c.D2(m) / f(m) for m in range(1, n + 1)), Fraction(0)
        )
        yield _inst((-1) ** n * c.D(n) / f(n), rhs, n=n, side="first")
    for n in range(1, c.n_max + 1):
        rhs = sum(
            (math.comb(n - 1, m - 1) * c.D(m) / f(m) for m in range(1, n + 1)), Fraction(0)
        )
        yield _inst((-1) ** n * c.D2(n) / f(n), rhs, n=n, side="second")


def _eq11_norlund(c: _Context, xs):
    T = c.T
    inv = fps.series_inverse(fps.build_log1p_over_t(T))
    for e in EQ11_EXPONENTS:
        base = fps.series_pow(inv, e)
        for x in xs:
            lhs = fps.series_mul(base, fps.build_binomial_pow(x - 1, T))
            for k in range(c.n_max + 1):
                rhs = c.norlund(k, k - e + 1, x)
                yield _inst(fps.egf_coeff(lhs, k), rhs, exponent=e, k=k, x=x)


def _eq22_rising(c: _Context, xs):
    for x in xs:
        for n in range(c.n_max + 1):
            lhs = rising_factorial(x, n)
            expansion = sum(
                (c.S1(n, l) * (-1) ** (n - l) * x ** l for l in range(n + 1)), Fraction(0)
            )
            yield _inst(lhs, (-1) ** n * falling_factorial(-x, n), n=n, x=x, form="falling")
            yield _inst(lhs, expansion, n=n, x=x, form="stirling")


def _eq3_shift_gf(c: _Context, xs):
    T = c.T
    G = fps.build_log1p_over_t(T)
    lhs = fps.series_mul(fps.build_binomial_pow(1, T), G) - G
    rhs = fps.build_log1p(T)
    for k in range(c.n_max + 1):
        yield _inst(lhs[k], rhs[k], k=k)


CATALOG: Dict[str, Tuple[str, Checker]] = {
    "thm1-stirling": ("D_n = sum_l S1(n,l) B_l", _thm1_stirling),
    "cor3-stirling": ("D_n(x) = sum_l S1(n,l) B_l(x)", _cor3_stirling),
    "thm2-norlund": ("D_n(x) = B_n^(n+2)(x+1)", _thm2_norlund),
    "thm4-inverse": ("B_m = sum_n D_n S2(m,n)", _thm4_inverse),
    "rem-thm4-poly": ("B_m(x) = sum_n D_n(x) S2(m,n)", _rem_thm4_poly),
    "thm5-stirling": ("D^_n = sum_l (-1)^l S1(n,l) B_l", _thm5_stirling),
    "thm6-stirling": ("D^_n(x) = sum_l (-1)^l S1(n,l) B_l(x)", _thm6_stirling),
    "thm7-inverse": ("B_m(1-x) = sum_n D^_n(x) S2(m,n)", _thm7_inverse),
    "thm7-reflection": ("B_m(1-x) = (-1)^m B_m(x)", _thm7_reflection),
    "rem-thm7-norlund": ("D^_n = B_n^(n+2)(2), D^_n(x) = B_n^(n+2)(2-x)", _rem_thm7_norlund),
    "thm8-reciprocal": (
        "(-1)^n D_n/n! = sum_m C(n-1,m-1) D^_m/m! and the same with D, D^ swapped",
        _thm8_reciprocal,
    ),
    "eq11-norlund": (
        "k![t^k] (t/log(1+t))^e (1+t)^(x-1) = B_k^(k-e+1)(x), e in -2..3",
        _eq11_norlund,
    ),
    "eq22-rising": ("x^(n) = (-1)^n (-x)_n = sum_l S1(n,l) (-1)^(n-l) x^l", _eq22_rising),
    "eq3-shift-gf": ("(1+t)G - G = log(1+t) for G = log(1+t)/t", _eq3_shift_gf),
}


def catalog_ids() -> List[str]:
    return list(CATALOG)


def working_trunc(n_max: int, trunc: Optional[int] = None) -> int:
    """Truncation order for an identity run: max(n_max + 2, 32) unless overridden."""
    T = max(n_max + 2, fps.DEFAULT_TRUNC) if trunc is None else trunc
    if n_max > T - 2:
        raise DaeheeError(f"n_max={n_max} needs a truncation order of at least {n_max + 2}, got {T}")
    return T


def _samples(x_samples: Optional[Sequence[RationalLike]]) -> List[Fraction]:
    xs = [Fraction(x) for x in (x_samples or ())]
    return xs or [Fraction(0)]


def verify(
    id: str,
    n_max: int,
    x_samples: Optional[Sequence[RationalLike]] = None,
    trunc: Optional[int] = None,
    _ctx: Optional[_Context] = None,
) -> IdentityCheck:
    """Check one catalog identity for all indices 0..n_max and all sample points.

    An empty ``x_samples`` means x = 0 only.
    """
    if id not in CATALOG:
        raise UnknownIdentityError(id, CATALOG)
    if n_max < 0:
        raise DaeheeError(f"n_max must be nonnegative, got {n_max}")
    T = working_trunc(n_max, trunc)
    xs = _samples(x_samples)
    ctx = _ctx if _ctx is not None else _Context(n_max, T)
    description, checker = CATALOG[id]
    check = IdentityCheck(id, description, n_max, xs)
    check.instances.extend(checker(ctx, xs))
    return check


def verify_all(
    n_max: int,
    x_samples: Optional[Sequence[RationalLike]] = None,
    ids: Optional[Sequence[str]] = None,
    trunc: Optional[int] = None,
    workers: int = 1,
) -> List[IdentityCheck]:
    """Run every catalog entry (or just ``ids``), results in catalog order."""
    ids = list(CATALOG) if ids is None else list(ids)
    for key in ids:
        if key not in CATALOG:
            raise UnknownIdentityError(key, CATALOG)
    T = working_trunc(n_max, trunc)
    if workers <= 1:
        ctx = _Context(n_max, T)
        return [verify(key, n_max, x_samples, T, ctx) for key in ids]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda key: verify(key, n_max, x_samples, T), ids))
