"""Dense univariate polynomials over the integers.

Coefficients are stored lowest degree first and are Python ints, so nothing
overflows.  The zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial",
    "X",
    "cyclotomic",
    "collision_poly",
    "resultant",
    "resultant_sylvester",
    "sylvester_matrix",
    "eval_mod",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, deg: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * deg + (coeff,))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> IntPolynomial:
        """Build from ``(exponent, coefficient)`` pairs, combining like terms."""
        acc: dict[int, int] = {}
        for e, c in terms:
            acc[e] = acc.get(e, 0) + c
        if not acc:
            return cls()
        top = max(acc)
        return cls(acc.get(i, 0) for i in range(top + 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self), len(other))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self or not other:
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_quotient(self, c: int) -> IntPolynomial:
        """Divide every coefficient by the integer c, which must divide all of them."""
        out = []
        for a in self.coeffs:
            q, rem = divmod(a, c)
            if rem:
                raise ArithmeticError(f"{c} does not divide {self}")
            out.append(q)
        return IntPolynomial(out)

    def divmod_monic(self, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Quotient and remainder by a divisor with leading coefficient +-1."""
        if d.lc not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dd = d.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(), self
        quo = [0] * (len(rem) - dd)
        lc = d.lc
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lc
            if c:
                quo[i - dd] = c
                for j, b in enumerate(d.coeffs):
                    rem[i - dd + j] -= c * b
        return IntPolynomial(quo), IntPolynomial(rem[:dd])

    def __floordiv__(self, d: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod_monic(d)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def __mod__(self, d: IntPolynomial) -> IntPolynomial:
        return self.divmod_monic(d)[1]

    def pseudo_remainder(self, d: IntPolynomial) -> IntPolynomial:
        """r with lc(d)**(deg self - deg d + 1) * self = q*d + r, deg r < deg d."""
        if not d:
            raise ZeroDivisionError("pseudo-division by zero polynomial")
        rem = list(self.coeffs)
        dd = d.degree
        lc = d.lc
        steps = len(rem) - 1 - dd + 1
        if steps <= 0:
            return self
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            for j in range(i + 1):
                rem[j] *= lc
            if c:
                for j, b in enumerate(d.coeffs):
                    rem[i - dd + j] -= c * b
        return IntPolynomial(rem[:dd])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("X" if i == 1 else f"X^{i}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


X = IntPolynomial((0, 1))


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPolynomial:
    """The k-th cyclotomic polynomial, by exact division of X^k - 1."""
    if k < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {k}")
    poly = IntPolynomial.monomial(k) - IntPolynomial((1,))
    for d in range(1, k):
        if k % d == 0:
            poly = poly // cyclotomic(d)
    return poly


def collision_poly(
    pair: tuple[int, int], other: tuple[int, int], k: int | None = None
) -> IntPolynomial:
    """(1 - X^u)(1 - X^v2) - (1 - X^u2)(1 - X^v) for pair=(u, v), other=(u2, v2).

    Exponents are the representatives 1..k-1 of nonzero residues mod k.
    Without k only the range-free conditions (positive, u != v) are checked.
    """
    u, v = pair
    u2, v2 = other
    for a, b in (pair, other):
        if a < 1 or b < 1 or a == b or (k is not None and (a >= k or b >= k)):
            raise ValueError(f"({a}, {b}) is not a valid exponent pair" + (f" for k={k}" if k else ""))
    return IntPolynomial.from_terms(
        [(u + v2, 1), (u2 + v, -1), (u, -1), (u2, 1), (v, 1), (v2, -1)]
    )


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.

    Subresultant polynomial remainder sequence; every division is exact so
    the computation stays in the integers.
    """
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    a, b = f, g
    if a.degree == 0 or b.degree == 0:
        # Res(c, g) = c^deg g and Res(f, c) = c^deg f.
        return a.lc ** b.degree if a.degree == 0 else b.lc ** a.degree

    ca, cb = a.content(), b.content()
    if a.lc < 0:
        ca = -ca
    if b.lc < 0:
        cb = -cb
    t = ca ** b.degree * cb ** a.degree
    a = a.exact_quotient(ca)
    b = b.exact_quotient(cb)
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -s

    g_, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        rem = a.pseudo_remainder(b)
        a = b
        if not rem:
            return 0
        b = rem.exact_quotient(g_ * h**delta)
        g_ = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = g_**delta // h ** (delta - 1)
        if b.degree == 0:
            break
    da = a.degree
    h = b.lc**da // h ** (da - 1) if da > 1 else (b.lc if da == 1 else h)
    return s * t * h


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def _bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    m = [list(row) for row in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for j in range(i + 1, n):
                if m[j][i]:
                    m[i], m[j] = m[j], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, n):
            for col in range(i + 1, n):
                m[j][col] = (m[j][col] * m[i][i] - m[j][i] * m[i][col]) // prev
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def resultant_sylvester(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant as the fraction-free (Bareiss) determinant of the Sylvester matrix."""
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    return _bareiss_det(sylvester_matrix(f, g))


def eval_mod(f: IntPolynomial, x: int, r: int) -> int:
    """f(x) mod r by Horner's rule on the reduced coefficients."""
    if r < 2:
        raise ValueError(f"modulus must be >= 2, got {r}")
    acc = 0
    x %= r
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % r
    return acc
