class GaussPeriodError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(GaussPeriodError, ValueError):
    """Inputs violate a precondition (r not prime, q not a prime power, ...)."""


class TrivialDegreeError(ParameterError):
    """n = 1 was requested; the extension degree must be at least 2."""


class NotEligibleError(GaussPeriodError):
    """The Gauss periods for this q do not form a normal basis."""

    def __init__(self, report):
        self.report = report
        super().__init__(
            f"q={report.q} is not eligible: gcd(nk/e, n) = gcd({report.quotient}, "
            f"{report.n}) = {report.gcd_value}"
        )


class InvariantViolation(GaussPeriodError, AssertionError):
    """An internal consistency check failed.  Always a bug, never bad input."""
