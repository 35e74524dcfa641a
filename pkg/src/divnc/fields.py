"""Exact scalar types for linear realizations, and an exact rank routine.

Only ring operations and equality are needed: `exact_rank` uses
fraction-free elimination, so it works over any integral domain.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

SQRT5 = math.sqrt(5.0)


class QSqrt5:
    """Element a + b*sqrt(5) of Q(sqrt 5) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, QSqrt5) else cls(x)

    def __add__(self, other):
        other = QSqrt5.coerce(other)
        return QSqrt5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QSqrt5.coerce(other))

    def __rsub__(self, other):
        return QSqrt5.coerce(other) - self

    def __mul__(self, other):
        other = QSqrt5.coerce(other)
        return QSqrt5(self.a * other.a + 5 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QSqrt5.coerce(other)
        norm = other.a * other.a - 5 * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        return self * QSqrt5(other.a / norm, -other.b / norm)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSqrt5(other)
        if not isinstance(other, QSqrt5):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __float__(self):
        return float(self.a) + float(self.b) * SQRT5

    def __complex__(self):
        return complex(float(self))

    def key(self):
        return (self.a, self.b)

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"


def _poly_divmod(num, den):
    """Divide integer polynomials (coefficient lists, low degree first) by a monic den."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd] if dd else []
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(k):
    """Integer coefficients of the k-th cyclotomic polynomial, low degree first."""
    poly = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_poly(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class Cyclotomic:
    """Element of Z[zeta_k], stored reduced modulo the k-th cyclotomic polynomial.

    The reduced coefficient tuple is canonical, so equality is tuple equality.
    """

    __slots__ = ("k", "coeffs")

    def __init__(self, k, coeffs):
        self.k = k
        phi = cyclotomic_poly(k)
        deg = len(phi) - 1
        coeffs = list(coeffs)
        if len(coeffs) > deg:
            _, coeffs = _poly_divmod(coeffs, phi)
        coeffs = coeffs + [0] * (deg - len(coeffs))
        self.coeffs = tuple(coeffs)

    @classmethod
    def root_power(cls, k, e):
        coeffs = [0] * k
        coeffs[e % k] = 1
        return cls(k, coeffs)

    @classmethod
    def const(cls, k, c):
        return cls(k, [c])

    def _lift(self, other):
        if isinstance(other, int):
            return Cyclotomic.const(self.k, other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        return Cyclotomic(self.k, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.k, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        out = [0] * (2 * len(self.coeffs))
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Cyclotomic(self.k, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Cyclotomic.const(self.k, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.k, self.coeffs))

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.k)
        return sum(c * z ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.k}, {self.coeffs})"


def exact_rank(matrix):
    """Rank of a matrix over an integral domain, by fraction-free elimination.

    Entries must support ``-``, ``*`` and comparison with ``0``.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(rank + 1, len(rows)):
            a = rows[r][col]
            if a != 0:
                rows[r] = [p[col] * x - a * y for x, y in zip(rows[r], p)]
        rank += 1
        if rank == len(rows):
            break
    return rank
