"""Modular and integer number theory primitives.

Everything here is a pure function of its arguments.  Moduli are plain
Python ints; the hot loops elsewhere in the package only ever see primes
below 2**63, but nothing in this module overflows for larger inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Factorization",
    "is_prime",
    "mod_pow",
    "mod_inverse",
    "multiplicative_order",
    "primitive_root",
    "element_of_order",
    "factorize",
    "is_prime_power",
    "primes_up_to",
]

# Strong-pseudoprime bases that are deterministic for n < 3.3 * 10**24,
# which covers every 64-bit input.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

_TRIAL_LIMIT = 1000


def primes_up_to(limit: int) -> list[int]:
    """Sieve of Eratosthenes, primes p <= limit."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = primes_up_to(_TRIAL_LIMIT)


def is_prime(m: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if m < 2:
        return False
    for p in _SMALL_PRIMES[:20]:
        if m % p == 0:
            return m == p
    d = m - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def mod_pow(base: int, exp: int, m: int) -> int:
    """``base**exp mod m`` with the result in ``[0, m)``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base, exp, m)


def mod_inverse(x: int, m: int) -> int:
    try:
        return pow(x, -1, m)
    except ValueError:
        raise ValueError(f"{x} is not invertible mod {m}") from None


@dataclass(frozen=True)
class Factorization:
    """``value == sign * prod(p**e for p, e in factors)``, primes ascending."""

    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def product(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of the odd composite n (Brent's variant)."""
    if n % 2 == 0:
        return 2
    # Deterministic sequence of polynomial constants; retry until one splits n.
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, out)
        _split(root, out)
        return
    d = _pollard_rho(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=65536)
def factorize(v: int) -> Factorization:
    """Complete factorization of a nonzero integer.

    Trial division strips primes below 1000; the remaining cofactor is split
    with Pollard rho and every prime it yields is certified by ``is_prime``.
    """
    if v == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if v < 0 else 1
    n = abs(v)
    found: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        _split(n, found)
    return Factorization(v, sign, tuple(sorted(found.items())))


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, s)`` with ``q == p**s`` or None when q is not a prime power."""
    if q < 2:
        raise ValueError(f"prime power must be >= 2, got {q}")
    fac = factorize(q).factors
    if len(fac) != 1:
        return None
    return fac[0]


def multiplicative_order(x: int, r: int) -> int:
    """Order of x in the unit group of Z_r, r prime.

    Starts from r - 1 and strips each prime factor for as long as the
    power stays 1.
    """
    x %= r
    if x == 0 or math.gcd(x, r) != 1:
        raise ValueError(f"{x} is not a unit mod {r}")
    e = r - 1
    for p, _ in factorize(r - 1).factors:
        while e % p == 0 and pow(x, e // p, r) == 1:
            e //= p
    return e


@lru_cache(maxsize=4096)
def primitive_root(r: int) -> int:
    """Smallest generator of the unit group of Z_r for prime r."""
    if r == 2:
        return 1
    ps = factorize(r - 1).primes
    for g in range(2, r):
        if all(pow(g, (r - 1) // p, r) != 1 for p in ps):
            return g
    raise ValueError(f"{r} has no primitive root")


def element_of_order(k: int, r: int) -> int:
    """Smallest residue of multiplicative order exactly k modulo the prime r.

    Elements of order k are the powers h**j (gcd(j, k) == 1) of
    h = g**((r-1)/k), so taking their minimum gives the smallest witness
    without scanning all of Z_r.
    """
    if k < 1 or (r - 1) % k:
        raise ValueError(f"{k} does not divide {r} - 1")
    if k == 1:
        return 1
    h = pow(primitive_root(r), (r - 1) // k, r)
    return min(pow(h, j, r) for j in range(1, k) if math.gcd(j, k) == 1)
