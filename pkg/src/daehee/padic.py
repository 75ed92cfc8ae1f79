"""Volkenborn Riemann sums for polynomial integrands and their p-adic convergence.

The invariant integral of ``f`` over Z_p is the limit of
``p**-N * sum(f(y) for y in range(p**N))``.  For the three polynomial
integrand families handled here the limit is known in closed form from the
Daehee and Bernoulli families, so each level's error can be measured exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from . import sequences
from .errors import BudgetExceededError, DaeheeError, InvalidPrimeError
from .numerics import (
    RationalLike,
    Valuation,
    falling_factorial,
    format_rational,
    format_valuation,
    is_prime,
    padic_valuation,
)

#: Largest number of terms a single partial sum may use.
DEFAULT_MAX_TERMS = 2_000_000


class IntegrandKind(enum.Enum):
    FALLING = "first"        # y -> (x + y)_n
    NEG_FALLING = "second"   # y -> (-x - y)_n
    MONOMIAL = "monomial"    # y -> (x + y)^n


@dataclass(frozen=True)
class Integrand:
    kind: IntegrandKind
    n: int
    x: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 0:
            raise DaeheeError(f"integrand degree must be nonnegative, got {self.n}")
        object.__setattr__(self, "x", Fraction(self.x))

    def __call__(self, y: RationalLike) -> Fraction:
        u = self.x + y
        if self.kind is IntegrandKind.FALLING:
            return falling_factorial(u, self.n)
        if self.kind is IntegrandKind.NEG_FALLING:
            return falling_factorial(-u, self.n)
        return u ** self.n

    def describe(self) -> str:
        x = format_rational(self.x)
        if self.kind is IntegrandKind.FALLING:
            return f"({x}+y)_{self.n}"
        if self.kind is IntegrandKind.NEG_FALLING:
            return f"(-{x}-y)_{self.n}"
        return f"({x}+y)^{self.n}"

    def translate(self) -> "Integrand":
        """The translate y -> f(y + 1); stays in the same family."""
        return Integrand(self.kind, self.n, self.x + 1)

    def power_coeffs(self) -> List[Fraction]:
        """Coefficients c_l with f(y) = sum_l c_l (x + y)^l."""
        n = self.n
        if self.kind is IntegrandKind.MONOMIAL:
            return [Fraction(0)] * n + [Fraction(1)]
        s1 = sequences.stirling1(n)
        sign = 1 if self.kind is IntegrandKind.FALLING else -1
        return [s1(n, l) * sign ** l for l in range(n + 1)]

    def derivative_at_zero(self) -> Fraction:
        """f'(0), differentiating the expansion in powers of (x + y) termwise."""
        cs = self.power_coeffs()
        return sum((l * c * self.x ** (l - 1) for l, c in enumerate(cs) if l and c), Fraction(0))

    def exact_limit(self) -> Fraction:
        """The Volkenborn integral of this integrand.

        FALLING gives D_n(x), NEG_FALLING gives D^_n(x), and MONOMIAL uses
        sum_k D_k(x) S2(n, k), which equals B_n(x).
        """
        if self.kind is IntegrandKind.FALLING:
            return sequences.daehee_poly(self.n, self.x)
        if self.kind is IntegrandKind.NEG_FALLING:
            return sequences.daehee2_poly(self.n, self.x)
        s2 = sequences.stirling2(self.n)
        gf = sequences.daehee_gf(self.x, self.n)
        return sum(
            (math.factorial(k) * gf[k] * s2(self.n, k) for k in range(self.n + 1)),
            Fraction(0),
        )

    def _integer_form(self) -> Tuple[List[int], int]:
        """Values g(0..n) of the integer polynomial g with f = g / scale."""
        b = self.x.denominator
        a = self.x.numerator
        n = self.n
        scale = b ** n
        vals = []
        for y in range(n + 1):
            u = a + b * y
            if self.kind is IntegrandKind.MONOMIAL:
                vals.append(u ** n)
                continue
            if self.kind is IntegrandKind.NEG_FALLING:
                u = -u
            prod = 1
            for j in range(n):
                prod *= u - j * b
            vals.append(prod)
        return vals, scale


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidPrimeError(f"{p} is not prime")


def _forward_differences(vals: Sequence[int]) -> List[int]:
    d = list(vals)
    out = []
    while d:
        out.append(d[0])
        d = [d[i + 1] - d[i] for i in range(len(d) - 1)]
    return out


def _running_sums(f: Integrand, p: int, levels: Sequence[int]) -> Tuple[dict, int]:
    """Raw integer sums of g(y) over y < p**N for each requested N, in one pass.

    The integrand value is advanced with a forward-difference table, so each
    step costs deg(f) integer additions and no divisions.
    """
    vals, scale = f._integer_form()
    diffs = _forward_differences(vals)
    deg = len(diffs) - 1
    stops = sorted(set(levels))
    out = {}
    total = 0
    y = 0
    for N in stops:
        end = p ** N
        if deg == 0:
            total = diffs[0] * end
            y = end
        else:
            while y < end:
                total += diffs[0]
                for j in range(deg):
                    diffs[j] += diffs[j + 1]
                y += 1
        out[N] = total
    return out, scale


def _check_budget(p: int, N: int, max_terms: int) -> None:
    if N < 0:
        raise DaeheeError(f"level must be nonnegative, got {N}")
    if p ** N > max_terms:
        raise BudgetExceededError(N, p, max_terms)


def volkenborn_partial_sum(
    f: Integrand, p: int, N: int, max_terms: int = DEFAULT_MAX_TERMS
) -> Fraction:
    """(1/p^N) * sum_{y=0}^{p^N - 1} f(y), exactly."""
    _check_prime(p)
    _check_budget(p, N, max_terms)
    sums, scale = _running_sums(f, p, [N])
    return Fraction(sums[N], scale * p ** N)


@dataclass(frozen=True)
class Level:
    N: int
    partial_sum: Fraction
    error: Fraction
    error_valuation: Valuation


@dataclass
class VolkenbornReport:
    p: int
    integrand: Integrand
    exact_limit: Fraction
    levels: List[Level] = field(default_factory=list)

    def valuations(self) -> List[Valuation]:
        return [lv.error_valuation for lv in self.levels]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "integrand": {
                "kind": self.integrand.kind.value,
                "n": self.integrand.n,
                "x": format_rational(self.integrand.x),
            },
            "exact_limit": format_rational(self.exact_limit),
            "levels": [
                {
                    "N": lv.N,
                    "sum": format_rational(lv.partial_sum),
                    "valuation": "inf" if lv.error_valuation == math.inf else lv.error_valuation,
                }
                for lv in self.levels
            ],
        }

    def rows(self) -> List[Tuple[str, ...]]:
        limit = format_rational(self.exact_limit)
        return [
            (
                str(lv.N),
                format_rational(lv.partial_sum),
                limit,
                format_rational(lv.error),
                format_valuation(lv.error_valuation),
            )
            for lv in self.levels
        ]


def convergence_report(
    f: Integrand,
    p: int,
    levels: Iterable[int],
    exact_limit: Optional[RationalLike] = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> VolkenbornReport:
    """Partial sums at each level N with the p-adic valuation of their error.

    ``exact_limit`` defaults to :meth:`Integrand.exact_limit`.  The budget is
    checked for every level before any summation starts.
    """
    _check_prime(p)
    levels = sorted(set(levels))
    for N in levels:
        _check_budget(p, N, max_terms)
    limit = f.exact_limit() if exact_limit is None else Fraction(exact_limit)
    sums, scale = _running_sums(f, p, levels)
    report = VolkenbornReport(p=p, integrand=f, exact_limit=limit)
    for N in levels:
        s = Fraction(sums[N], scale * p ** N)
        err = s - limit
        report.levels.append(Level(N, s, err, padic_valuation(err, p)))
    return report


def max_level(p: int, max_terms: int = DEFAULT_MAX_TERMS) -> int:
    """Largest N with p**N within the term budget."""
    _check_prime(p)
    N = 0
    while p ** (N + 1) <= max_terms:
        N += 1
    return N
