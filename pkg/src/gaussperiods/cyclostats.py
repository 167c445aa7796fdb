"""Value distributions of cyclotomic numbers.

Two independent routes produce the same ``TauDistribution``:

* ``tau_distribution`` tallies the map
  ``S(u, v) = -(1 - w^v) / (w^u - w^v)`` over the k^2-sized set of exponent
  pairs, where ``w`` has order k.  Cost O(k^2) regardless of r.
* ``brute_force_matrix`` walks every x in Z_r^* and records which pair of
  K-cosets x and 1 + x fall in, giving the cyclotomic numbers t_ij
  directly.  Cost O(r).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import InvariantViolation, ParameterError, TrivialDegreeError
from .ntheory import element_of_order, is_prime, multiplicative_order, primitive_root

__all__ = [
    "GaussParams",
    "TauDistribution",
    "SparseCosetMatrix",
    "Tally",
    "s_map",
    "exponent_pairs",
    "build_tally",
    "tau_distribution",
    "coset_index_table",
    "brute_force_matrix",
    "distribution_from_matrix",
    "is_s_injective",
    "star_row",
]


@dataclass(frozen=True)
class GaussParams:
    """Gauss period type (n, k) with the prime r = nk + 1."""

    k: int
    n: int
    r: int = field(init=False)

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"k must be positive, got {self.k}")
        if self.n == 1:
            raise TrivialDegreeError("n = 1 is excluded; the degree n must be >= 2")
        if self.n < 1:
            raise ParameterError(f"n must be >= 2, got {self.n}")
        r = self.n * self.k + 1
        if not is_prime(r):
            raise ParameterError(f"r = {self.n}*{self.k}+1 = {r} is not prime")
        object.__setattr__(self, "r", r)

    @classmethod
    def from_prime(cls, k: int, r: int) -> GaussParams:
        if (r - 1) % k:
            raise ParameterError(f"{r} is not 1 mod {k}")
        return cls(k, (r - 1) // k)


def star_row(params: GaussParams) -> int:
    """Index of the coset -K: 0 for even k, n/2 for odd k."""
    if params.k % 2 == 0:
        return 0
    if params.n % 2:
        raise InvariantViolation(f"k={params.k} and n={params.n} both odd")
    return params.n // 2


@dataclass(frozen=True)
class TauDistribution:
    """``a[tau]`` counts entries t_ij == tau; ``a_star`` is the same for the -K row."""

    params: GaussParams
    a: tuple[int, ...]
    a_star: tuple[int, ...]

    def nonzero(self) -> tuple[dict[int, int], dict[int, int]]:
        return (
            {t: c for t, c in enumerate(self.a) if c},
            {t: c for t, c in enumerate(self.a_star) if c},
        )

    def check(self) -> None:
        """Raise InvariantViolation unless the counting identities hold."""
        k, n = self.params.k, self.params.n
        a, s = self.a, self.a_star
        problems = []
        if len(a) != k + 1 or len(s) != k + 1:
            problems.append("length")
        if sum(a) != n * n:
            problems.append(f"sum a = {sum(a)} != n^2 = {n * n}")
        if sum(t * c for t, c in enumerate(a)) != n * k - 1:
            problems.append("sum tau*a != nk - 1")
        if sum(s) != n:
            problems.append(f"sum a_star = {sum(s)} != n = {n}")
        if sum(t * c for t, c in enumerate(s)) != k - 1:
            problems.append("sum tau*a_star != k - 1")
        if any(c < 0 or c > d for c, d in zip(s, a)):
            problems.append("a_star not bounded by a")
        if problems:
            raise InvariantViolation(f"{self.params}: " + "; ".join(problems))


@dataclass(frozen=True)
class SparseCosetMatrix:
    """Nonzero cyclotomic numbers keyed by (row coset, column coset)."""

    params: GaussParams
    entries: dict[tuple[int, int], int]

    def row_sums(self) -> list[int]:
        sums = [0] * self.params.n
        for (i, _), t in self.entries.items():
            sums[i] += t
        return sums

    def max_entry(self) -> int:
        return max(self.entries.values(), default=0)


@dataclass
class Tally:
    """Multiplicities of the values of S, with membership in (-1)^k <w>."""

    params: GaussParams
    omega: int
    multiplicity_of_value: Counter
    star_membership: dict[int, bool]

    @property
    def total(self) -> int:
        return sum(self.multiplicity_of_value.values())

    def multiplicity_histogram(self, star_only: bool = False) -> Counter:
        hist: Counter = Counter()
        for x, m in self.multiplicity_of_value.items():
            if not star_only or self.star_membership[x]:
                hist[m] += 1
        return hist


def s_map(u: int, v: int, omega: int, r: int) -> int:
    """-(1 - w^v) / (w^u - w^v) mod r.

    (u, v) must satisfy u, v != 0 and u != v modulo the order of w; this
    is checked on the powers themselves.
    """
    wu = pow(omega, u, r)
    wv = pow(omega, v, r)
    if wu == 1 or wv == 1 or wu == wv:
        raise ParameterError(f"({u}, {v}) is not an admissible exponent pair")
    return -(1 - wv) * pow(wu - wv, -1, r) % r


def exponent_pairs(k: int):
    """All (u, v) with u, v in 1..k-1 and u != v."""
    return [(u, v) for u in range(1, k) for v in range(1, k) if u != v]


def _check_omega(params: GaussParams, omega: int | None) -> int:
    if omega is None:
        return element_of_order(params.k, params.r)
    if multiplicative_order(omega, params.r) != params.k:
        raise ParameterError(f"{omega} does not have order {params.k} mod {params.r}")
    return omega


def build_tally(params: GaussParams, omega: int | None = None) -> Tally:
    k, r = params.k, params.r
    w = _check_omega(params, omega)
    powers = [pow(w, e, r) for e in range(k)]
    inv = {}
    counts: Counter = Counter()
    for u in range(1, k):
        wu = powers[u]
        for v in range(1, k):
            if u == v:
                continue
            wv = powers[v]
            d = (wu - wv) % r
            di = inv.get(d)
            if di is None:
                di = inv[d] = pow(d, -1, r)
            counts[(wv - 1) * di % r] += 1
    star = set(powers) if k % 2 == 0 else {r - x for x in powers}
    return Tally(params, w, counts, {x: x in star for x in counts})


def _divide_exact(count: int, tau: int, params: GaussParams) -> int:
    q, rem = divmod(count, tau)
    if rem:
        raise InvariantViolation(
            f"{params}: {count} values of multiplicity {tau - 1} is not divisible by {tau}"
        )
    return q


def tau_distribution(params: GaussParams, omega: int | None = None) -> TauDistribution:
    """a(tau) and a_star(tau) for 0 <= tau <= k from the S-map tally."""
    k, n = params.k, params.n
    tally = build_tally(params, omega)
    a = [0] * (k + 1)
    s = [0] * (k + 1)
    for hist, out in (
        (tally.multiplicity_histogram(), a),
        (tally.multiplicity_histogram(star_only=True), s),
    ):
        for m, count in hist.items():
            tau = m + 1
            if tau > k:
                raise InvariantViolation(f"{params}: multiplicity {m} exceeds k - 1")
            out[tau] = _divide_exact(count, tau, params)
    a[1] = n * k - 1 - sum(t * a[t] for t in range(2, k + 1))
    a[0] = n * n - sum(a[1:])
    s[1] = k - 1 - sum(t * s[t] for t in range(2, k + 1))
    s[0] = n - sum(s[1:])
    dist = TauDistribution(params, tuple(a), tuple(s))
    dist.check()
    return dist


def coset_index_table(params: GaussParams) -> list[int]:
    """``idx[x]`` is the K-coset of x in 1..r-1, numbered so g^j K -> j mod n.

    g is the smallest primitive root; ``idx[0]`` is -1.
    """
    r, n = params.r, params.n
    g = primitive_root(r)
    idx = [-1] * r
    x = 1
    for j in range(r - 1):
        idx[x] = j % n
        x = x * g % r
    return idx


def brute_force_matrix(params: GaussParams) -> SparseCosetMatrix:
    idx = coset_index_table(params)
    counts: Counter = Counter()
    for x in range(1, params.r - 1):
        counts[(idx[x], idx[x + 1])] += 1
    return SparseCosetMatrix(params, dict(counts))


def distribution_from_matrix(matrix: SparseCosetMatrix) -> TauDistribution:
    params = matrix.params
    k, n = params.k, params.n
    row = star_row(params)
    a = [0] * (k + 1)
    s = [0] * (k + 1)
    for (i, _), t in matrix.entries.items():
        a[t] += 1
        if i == row:
            s[t] += 1
    a[0] = n * n - len(matrix.entries)
    s[0] = n - sum(s[1:])
    dist = TauDistribution(params, tuple(a), tuple(s))
    dist.check()
    return dist


def is_s_injective(params: GaussParams) -> bool:
    """True iff every cyclotomic number is at most 2."""
    tally = build_tally(params)
    return all(m == 1 for m in tally.multiplicity_of_value.values())
