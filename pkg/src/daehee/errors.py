"""Exception hierarchy.  The CLI maps these onto exit codes."""


class DaeheeError(Exception):
    """Base class for all errors raised by this package."""


class RationalDivisionError(DaeheeError, ZeroDivisionError):
    pass


class InvalidPrimeError(DaeheeError, ValueError):
    pass


class ParseError(DaeheeError, ValueError):
    pass


class TruncationMismatchError(DaeheeError, ValueError):
    """Two series with different truncation orders were combined."""


class NonUnitSeriesError(DaeheeError, ValueError):
    """A negative power was requested of a series with zero constant term."""


class BudgetExceededError(DaeheeError):
    """A Volkenborn partial sum would need more terms than allowed."""

    def __init__(self, level: int, p: int, max_terms: int):
        self.level = level
        self.p = p
        self.max_terms = max_terms
        super().__init__(
            f"level N={level} needs {p}**{level} = {p ** level} terms, "
            f"over the budget of {max_terms}"
        )


class UnknownIdentityError(DaeheeError, KeyError):
    def __init__(self, key: str, valid):
        self.key = key
        self.valid = list(valid)
        super().__init__(f"unknown identity {key!r}; valid ids: {', '.join(self.valid)}")

    def __str__(self) -> str:
        return self.args[0]
