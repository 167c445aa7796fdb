"""Exceptional primes: r = nk + 1 for which the S-map has a collision.

A collision S(u, v) = S(u2, v2) mod r happens exactly when the collision
polynomial of the two pairs vanishes at a root of the k-th cyclotomic
polynomial mod r, so every such r divides Res(f, Phi_k) for some pair.
Each resultant is factored on its own (never multiplied together), and
every prime candidate is then confirmed by a direct tally.

The bound |Res(f, Phi_k)| <= 6^phi(k) used in the checks below is derived
here, not quoted: f has six +-1 terms so |f(zeta)| <= 6 on the unit circle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .cyclostats import GaussParams, is_s_injective
from .errors import InvariantViolation
from .intpoly import collision_poly, cyclotomic, resultant
from .ntheory import factorize, is_prime

__all__ = [
    "ExceptionalRecord",
    "reduced_pairs",
    "pair_resultant",
    "exceptional_primes",
    "degenerate_pairs",
    "degenerate_pair_check",
    "degenerate_resultant_closed_form",
    "direct_search",
]

Pair = tuple[int, int]
PairOfPairs = tuple[Pair, Pair]


@dataclass(frozen=True)
class ExceptionalRecord:
    k: int
    entries: tuple[tuple[int, int], ...]
    witnesses: dict[int, PairOfPairs] = field(default_factory=dict, compare=False)
    pairs_checked: int = field(default=0, compare=False)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.entries)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.entries)


def reduced_pairs(k: int) -> list[PairOfPairs]:
    """Pairs ((u, v), (u2, v2)) with v, u2 > u, v2 >= u and v != v2.

    Swapping the two pairs or the coordinates inside both only flips the
    sign of the collision polynomial, so u can be taken as the smallest
    exponent; pairs with u == u2 or v == v2 never give a collision.
    Empty for k <= 3: when k = 3 the only two values of S are w and w^2.
    """
    out = []
    if k <= 3:
        return out
    for u in range(1, k):
        for v in range(u + 1, k):
            for u2 in range(u + 1, k):
                for v2 in range(u, k):
                    if v2 == u2 or v2 == v:
                        continue
                    out.append(((u, v), (u2, v2)))
    return out


def pair_resultant(k: int, pair: PairOfPairs) -> int:
    return resultant(collision_poly(*pair, k=k), cyclotomic(k))


def _candidate_primes(k: int, value: int) -> list[int]:
    return [p for p in factorize(value).primes if p > k + 1 and p % k == 1]


def _scan_chunk(args: tuple[int, list[PairOfPairs]]) -> list[tuple[PairOfPairs, int, list[int]]]:
    k, pairs = args
    phi = cyclotomic(k)
    bound = 6 ** phi.degree
    # Different pairs can cancel down to the same polynomial.
    seen: dict[tuple[int, ...], int] = {}
    out = []
    for pair in pairs:
        f = collision_poly(*pair, k=k)
        key = f.coeffs
        res = seen.get(key)
        if res is None:
            res = seen[key] = resultant(f, phi)
        if res == 0:
            raise InvariantViolation(f"k={k}: resultant vanishes for {pair}")
        if abs(res) > bound:
            raise InvariantViolation(f"k={k}: |Res| = {abs(res)} exceeds 6^phi(k)")
        cands = _candidate_primes(k, res)
        if cands:
            out.append((pair, res, cands))
    return out


def exceptional_primes(k: int, threads: int = 1) -> ExceptionalRecord:
    """The exceptional primes for k, each with a witnessing pair."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    pairs = reduced_pairs(k)
    if threads > 1 and len(pairs) > 2000:
        size = -(-len(pairs) // (threads * 4))
        chunks = [(k, pairs[i : i + size]) for i in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            hits = [h for part in pool.map(_scan_chunk, chunks) for h in part]
    else:
        hits = _scan_chunk((k, pairs))

    witnesses: dict[int, PairOfPairs] = {}
    for pair, _, cands in hits:
        for r in cands:
            witnesses.setdefault(r, pair)
    entries = []
    for r in sorted(witnesses):
        params = GaussParams.from_prime(k, r)
        if is_s_injective(params):
            raise InvariantViolation(
                f"k={k}: r={r} divides a resultant but the S-map is injective"
            )
        entries.append((params.n, r))
    return ExceptionalRecord(k, tuple(entries), witnesses, len(pairs))


def direct_search(k: int, r_max: int) -> list[tuple[int, int]]:
    """(n, r) for every prime r = nk + 1 <= r_max, n >= 2, with a collision."""
    out = []
    for n in range(2, (r_max - 1) // k + 1):
        r = n * k + 1
        if is_prime(r) and not is_s_injective(GaussParams(k, n)):
            out.append((n, r))
    return out


def degenerate_pairs(k: int) -> list[PairOfPairs]:
    """Pairs with u <= min(v, u2, v2) that share a coordinate (u == u2 or v == v2)."""
    out = []
    for u in range(1, k):
        for v in range(u + 1, k):
            for u2 in range(u, k):
                for v2 in range(u, k):
                    if u2 == v2 or (u, v) == (u2, v2):
                        continue
                    if u == u2 or v == v2:
                        out.append(((u, v), (u2, v2)))
    return out


def degenerate_resultant_closed_form(k: int, pair: PairOfPairs) -> int:
    """|Res| for a v == v2 pair, as a product of powers of Phi_m(1).

    The polynomial factors as -X^u (X^(u2-u) - 1)(X^v - 1).  For d != 0 mod k,
    zeta^(d*l) with l a unit mod k runs over the primitive (k/g)-th roots
    (g = gcd(k, d)), each phi(k)/phi(k/g) times, so that factor contributes
    Phi_{k/g}(1)^(phi(k)/phi(k/g)).
    """
    (u, v), (u2, v2) = pair
    if v != v2:
        raise ValueError("closed form needs v == v2")
    phi_k = cyclotomic(k).degree
    out = 1
    for d in (u2 - u, v):
        m = k // gcd(k, d)
        out *= cyclotomic(m)(1) ** (phi_k // cyclotomic(m).degree)
    return abs(out)


def degenerate_pair_check(k: int, limit: int | None = None) -> bool:
    """True when no excluded pair's resultant has a prime factor above k."""
    if k < 3:
        raise ValueError("k must be >= 3")
    phi = cyclotomic(k)
    pairs = degenerate_pairs(k)
    if limit is not None:
        pairs = pairs[:: max(1, len(pairs) // limit)]
    for pair in pairs:
        res = resultant(collision_poly(*pair, k=k), phi)
        if res == 0 or any(p > k for p in factorize(res).primes):
            return False
    return True

