"""Exact Daehee numbers and polynomials of both kinds, with the Bernoulli and
Stirling families they are built from, p-adic Volkenborn sums, and a catalog
of identities checked to exact rational equality."""

from .errors import (
    BudgetExceededError,
    DaeheeError,
    InvalidPrimeError,
    NonUnitSeriesError,
    ParseError,
    RationalDivisionError,
    TruncationMismatchError,
    UnknownIdentityError,
)
from .fps import TruncatedSeries
from .identities import IdentityCheck, catalog_ids, verify, verify_all
from .numerics import (
    INFINITY,
    Rational,
    binomial,
    falling_factorial,
    format_rational,
    padic_valuation,
    parse_rational,
    rational_arith,
    rising_factorial,
)
from .padic import (
    Integrand,
    IntegrandKind,
    VolkenbornReport,
    convergence_report,
    volkenborn_partial_sum,
)
from .sequences import (
    SequenceTable,
    Triangle,
    bernoulli_higher,
    bernoulli_numbers,
    bernoulli_poly,
    daehee2_numbers,
    daehee2_poly,
    daehee_numbers,
    daehee_poly,
    stirling1,
    stirling2,
)

__version__ = "0.1.0"
