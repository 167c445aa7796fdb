"""Complexity of Gauss period normal bases.

``complexity`` always goes through the tallied distribution.  The closed
forms (``theorem_1_1`` for the generic case, ``n2_distribution`` for
r = 2k + 1) are exposed separately so they can be checked against it.

Eligibility and prime powers: ``check_eligibility`` is exact for the given
q.  ``complexity_profile`` records eligibility at q = p only.  That is safe
for every power of p because e(p^s) = e(p)/gcd(e(p), s) divides e(p), so
nk/e(p) divides nk/e(p^s) and a common factor with n at q = p survives.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .cyclostats import (
    GaussParams,
    SparseCosetMatrix,
    TauDistribution,
    star_row,
    tau_distribution,
)
from .errors import InvariantViolation, NotEligibleError, ParameterError
from .ntheory import is_prime, is_prime_power, multiplicative_order, primes_up_to

__all__ = [
    "CharSpec",
    "EligibilityReport",
    "ComplexityResult",
    "Path",
    "ProfileEntry",
    "check_eligibility",
    "complexity",
    "complexity_from_distribution",
    "complexity_from_matrix",
    "theorem_1_1",
    "n2_distribution",
    "complexity_profile",
]


class Path(str, enum.Enum):
    GENERIC_ALGORITHM = "generic_algorithm"
    THEOREM_1_1 = "theorem_1_1"
    N2_CLOSED_FORM = "n2_closed_form"


@dataclass(frozen=True)
class CharSpec:
    """The ground field size q = p^s."""

    q: int
    p: int
    s: int

    @classmethod
    def from_q(cls, q: int) -> CharSpec:
        if q < 2:
            raise ParameterError(f"q must be a prime power, got {q}")
        pp = is_prime_power(q)
        if pp is None:
            raise ParameterError(f"q = {q} is not a prime power")
        return cls(q, *pp)


@dataclass(frozen=True)
class EligibilityReport:
    q: int
    n: int
    e: int
    quotient: int
    gcd_value: int

    @property
    def eligible(self) -> bool:
        return self.gcd_value == 1


@dataclass(frozen=True)
class ComplexityResult:
    params: GaussParams
    char: CharSpec
    value: int
    path: Path
    eligibility: EligibilityReport


@dataclass(frozen=True)
class ProfileEntry:
    """One characteristic class of a profile.

    ``open_class`` marks the merged class of all primes above k; its label
    prime is the largest prime <= k, read as "p > label".
    """

    p: int
    value: int
    eligible: bool | None
    open_class: bool = False

    @property
    def label(self) -> str:
        return f"p>{self.p}" if self.open_class else f"p={self.p}"


def check_eligibility(params: GaussParams, char: CharSpec) -> EligibilityReport:
    if char.p == params.r:
        raise ParameterError(f"r = {params.r} divides q = {char.q}")
    e = multiplicative_order(char.q % params.r, params.r)
    quotient = params.n * params.k // e
    return EligibilityReport(char.q, params.n, e, quotient, gcd(quotient, params.n))


def complexity_from_distribution(dist: TauDistribution, p: int) -> int:
    """n^2 minus the entries of the multiplication matrix that vanish mod p."""
    k, n = dist.params.k, dist.params.n
    value = n * n
    for tau in range(k + 1):
        if tau % p == 0:
            value -= dist.a[tau] - dist.a_star[tau]
        if (tau - k) % p == 0:
            value -= dist.a_star[tau]
    return value


def complexity_from_matrix(matrix: SparseCosetMatrix, p: int) -> int:
    """Count (i, j) with t_ij - k*delta_i nonzero mod p, straight from the matrix."""
    params = matrix.params
    k, n = params.k, params.n
    row = star_row(params)
    count = 0
    star_present = 0
    for (i, _), t in matrix.entries.items():
        shift = k if i == row else 0
        if (t - shift) % p:
            count += 1
        star_present += i == row
    # Absent entries are zero; off the star row they vanish mod p.
    if k % p:
        count += n - star_present
    return count


def _sanity(params: GaussParams, value: int) -> None:
    n = params.n
    if not 2 * n - 1 <= value <= n * n:
        raise InvariantViolation(f"{params}: complexity {value} outside [2n-1, n^2]")


def complexity(
    params: GaussParams, char: CharSpec, dist: TauDistribution | None = None
) -> ComplexityResult:
    """C(n, k; q) via the tallied distribution (valid for every prime r)."""
    report = check_eligibility(params, char)
    if not report.eligible:
        raise NotEligibleError(report)
    if dist is None:
        dist = tau_distribution(params)
    value = complexity_from_distribution(dist, char.p)
    _sanity(params, value)
    return ComplexityResult(params, char, value, Path.GENERIC_ALGORITHM, report)


def theorem_1_1(k: int, n: int, p: int) -> int:
    """Closed form for C(n, k; q), valid when every cyclotomic number is <= 2."""
    if k < 1 or n < 2 or not is_prime(p):
        raise ParameterError(f"invalid arguments k={k}, n={n}, p={p}")
    # k*k is even whenever k is, so the halvings below are exact.
    if k % 2 == 0:
        if p == 2:
            return n * k - k * k + 3 * k - 3
        if k % p == 0:
            return n * k - (k * k - 3 * k) // 2 - 2
        if k % p == 1:
            return n * (k + 1) - k * k // 2 + k - 3
        if k % p == 2:
            return n * (k + 1) - (k * k - k) // 2 - 1
        return n * (k + 1) - k * k // 2 + k - 2
    if p == 2:
        return n * (k + 1) - k * k + k - 1
    if k % p == 0:
        return n * k - (k * k - 3 * k) // 2 - 2
    if k % p == 1:
        return n * (k + 1) - (k * k + k) // 2
    return n * (k + 1) - (k * k - k) // 2 - 1


def n2_distribution(k: int) -> TauDistribution:
    """Closed-form distribution for n = 2, i.e. r = 2k + 1 prime."""
    if not is_prime(2 * k + 1):
        raise ParameterError(f"2k+1 = {2 * k + 1} is not prime")
    params = GaussParams(k, 2)
    a = [0] * (k + 1)
    s = [0] * (k + 1)
    if k % 2 == 0:
        a[k // 2 - 1] += 1
        a[k // 2] += 3
        s[k // 2 - 1] += 1
        s[k // 2] += 1
    else:
        a[(k - 1) // 2] += 3
        a[(k + 1) // 2] += 1
        s[(k - 1) // 2] += 2
    dist = TauDistribution(params, tuple(a), tuple(s))
    dist.check()
    return dist


def complexity_profile(
    params: GaussParams, dist: TauDistribution | None = None
) -> list[ProfileEntry]:
    """C for every prime p <= k, then one merged class for all p > k.

    For p > k only tau = 0 is 0 mod p and only tau = k is k mod p within
    0..k, so the value is the same for every such p.  Eligibility of the
    open class depends on the particular q and is left as None.
    """
    if dist is None:
        dist = tau_distribution(params)
    small = [p for p in primes_up_to(params.k)]
    out = []
    for p in small:
        report = check_eligibility(params, CharSpec(p, p, 1))
        value = complexity_from_distribution(dist, p)
        if report.eligible:
            _sanity(params, value)
        out.append(ProfileEntry(p, value, report.eligible))
    above = params.k + 1
    while not is_prime(above) or above == params.r:
        above += 1
    value = complexity_from_distribution(dist, above)
    _sanity(params, value)
    label = small[-1] if small else 1
    out.append(ProfileEntry(label, value, None, open_class=True))
    return out
