"""Exact arithmetic: big rationals and dense univariate polynomials over Q.

Coefficients are stored densely in ascending order (constant term first)
with no trailing zeros; the zero polynomial has an empty coefficient
sequence.  Rational scalars are `fractions.Fraction` (always reduced,
positive denominator), integer polynomials keep plain Python ints.  All
values are immutable after construction and every operation is pure, so
everything here is safe to share across threads.

The gcd/resultant machinery runs over Z via pseudo-division (primitive PRS
for gcd, subresultant PRS for resultants) to keep intermediate coefficients
small.
"""

from __future__ import annotations

import hashlib
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = [
    "RatPoly",
    "IntPoly",
    "poly_gcd",
    "squarefree_part",
    "discriminant",
    "resultant",
    "make_integral_monic",
    "format_poly",
    "poly_digest",
]


# ---------------------------------------------------------------------------
# low-level helpers on raw coefficient lists (ascending order)

def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


def _zadd(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return _strip(out)


def _zneg(f):
    return [-c for c in f]


def _zmul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _zderiv(f):
    return _strip([i * c for i, c in enumerate(f)][1:])


def _zcontent(f):
    c = 0
    for a in f:
        c = math.gcd(c, a)
        if c == 1:
            break
    return c


def _zprimitive(f):
    """Primitive part with positive leading coefficient."""
    if not f:
        return []
    c = _zcontent(f)
    if f[-1] < 0:
        c = -c
    return [a // c for a in f]


def _zprem(f, g):
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, over Z.

    The multiplier exponent is exact (we scale by lc(g) on every step even
    when the leading term already vanished), as the subresultant algorithm
    requires.
    """
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return list(f)
    l = g[-1]
    r = list(f)
    for k in range(df, dg - 1, -1):
        coef = r[k]
        r = [l * c for c in r]
        if coef:
            for j in range(dg + 1):
                r[k - dg + j] -= coef * g[j]
    return _strip(r[:dg] if dg > 0 else [])


def _zgcd(f, g):
    """Primitive gcd over Z (positive leading coefficient), primitive PRS."""
    a, b = _zprimitive(f), _zprimitive(g)
    while b:
        a, b = b, _zprimitive(_zprem(a, b))
    return a


def _zdiv_exact(f, g):
    """Exact quotient f / g over Z, or None when g does not divide f."""
    if not g:
        return None
    if not f:
        return []
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return None
    r = [Fraction(c) for c in f]
    q = [Fraction(0)] * (df - dg + 1)
    lg = Fraction(g[-1])
    for k in range(df - dg, -1, -1):
        c = r[k + dg] / lg
        q[k] = c
        if c:
            for j in range(dg + 1):
                r[k + j] -= c * g[j]
    if any(r[:dg]):
        return None
    if any(c.denominator != 1 for c in q):
        return None
    return _strip([int(c) for c in q])


def _zresultant(f, g):
    """Sylvester resultant of two nonzero integer polynomials.

    Subresultant PRS (Cohen, Alg. 3.3.7) so intermediate coefficients stay
    polynomially bounded.
    """
    df, dg = len(f) - 1, len(g) - 1
    if df == 0:
        return f[0] ** dg
    if dg == 0:
        return g[0] ** df
    sign = 1
    A, B = list(f), list(g)
    if df < dg:
        A, B = B, A
        if df % 2 and dg % 2:
            sign = -sign
    ca, cb = abs(_zcontent(A)), abs(_zcontent(B))
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    gg = 1
    h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        R = _zprem(A, B)
        if not R:
            return 0
        A = B
        denom = gg * h ** delta
        B = [c // denom for c in R]
        gg = A[-1]
        if delta:
            h = gg ** delta // h ** (delta - 1)
        if len(B) - 1 == 0:
            da = len(A) - 1
            res = B[0] ** da // h ** (da - 1) if da > 1 else B[0] ** da
            return sign * t * res


# ---------------------------------------------------------------------------
# formatting

def _fmt_coeff(c):
    return str(c)


def format_poly(coeffs: Sequence[Scalar], var: str = "x") -> str:
    """Canonical text form, highest degree first: ``x^2 - 3/2*x + 1``."""
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _fmt_coeff(mag)
        else:
            xpow = var if k == 1 else f"{var}^{k}"
            body = xpow if mag == 1 else f"{_fmt_coeff(mag)}*{xpow}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def poly_digest(coeffs: Sequence[Scalar]) -> str:
    """sha256 of the canonical coefficient encoding (ascending order)."""
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    payload = "deg:%d;" % (len(coeffs) - 1) + ",".join(str(c) for c in coeffs)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


# ---------------------------------------------------------------------------
# polynomial classes

class RatPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        self.coeffs = tuple(_strip(cs))

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls()

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        return RatPoly(_zadd(list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatPoly()
            return RatPoly(tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        return RatPoly(_zmul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = RatPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        raise TypeError(f"cannot coerce {other!r} to RatPoly")

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def monic(self) -> "RatPoly":
        if self.is_zero or self.lc == 1:
            return self
        inv = 1 / self.lc
        return RatPoly(tuple(c * inv for c in self.coeffs))

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        q = [Fraction(0)] * (dq + 1)
        d = other.coeffs
        dd = len(d) - 1
        for k in range(dq, -1, -1):
            c = r[k + dd] / d[-1]
            q[k] = c
            if c:
                for j in range(dd + 1):
                    r[k + j] -= c * d[j]
        return RatPoly(q), RatPoly(r[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def to_int(self) -> tuple[Fraction, "IntPoly"]:
        """Split into content * primitive integer polynomial (positive lc).

        ``self == content * primitive``; the zero polynomial returns
        ``(0, zero)``.
        """
        if self.is_zero:
            return Fraction(0), IntPoly()
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        num = _zcontent(ints)
        if ints[-1] < 0:
            num = -num
        return Fraction(num, den), IntPoly([a // num for a in ints])

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"RatPoly({format_poly(self.coeffs)!r})"


class IntPoly:
    """Dense univariate polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        self.coeffs = tuple(_strip(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        return _zcontent(self.coeffs)

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        return IntPoly(_zprimitive(list(self.coeffs)))

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        return IntPoly(_zadd(list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        return IntPoly(_zmul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __call__(self, x: Scalar):
        acc = 0 if isinstance(x, int) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(_zderiv(list(self.coeffs)))

    def exact_div(self, other: "IntPoly"):
        """Exact quotient over Z, or None when ``other`` does not divide."""
        q = _zdiv_exact(list(self.coeffs), list(other.coeffs))
        return None if q is None else IntPoly(q)

    def gcd(self, other: "IntPoly") -> "IntPoly":
        """Primitive gcd over Z with positive leading coefficient."""
        return IntPoly(_zgcd(list(self.coeffs), list(other.coeffs)))

    def to_rat(self) -> RatPoly:
        return RatPoly(self.coeffs)

    def max_norm(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"IntPoly({format_poly(self.coeffs)!r})"


# ---------------------------------------------------------------------------
# the classical operations

def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd over Q; ``poly_gcd(a, 0)`` is the monic normalization of a."""
    if a.is_zero and b.is_zero:
        return RatPoly()
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    A = a.to_int()[1]
    B = b.to_int()[1]
    g = _zgcd(list(A.coeffs), list(B.coeffs))
    return RatPoly(g).monic()


def squarefree_part(f: RatPoly) -> RatPoly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    if f.degree == 0:
        return RatPoly.one()
    g = poly_gcd(f, f.derivative())
    return (f // g).monic()


def resultant(a: RatPoly, b: RatPoly) -> Fraction:
    """Sylvester resultant over Q with the classical normalization.

    ``Res(x - c, g) = g(c)`` and ``Res(a, b) = (-1)^(deg a * deg b) Res(b, a)``.
    """
    if a.is_zero or b.is_zero:
        raise ValueError("resultant of the zero polynomial")
    da, db = a.degree, b.degree
    if da == 0:
        return a.lc ** db
    if db == 0:
        return b.lc ** da
    ca, A = a.to_int()
    cb, B = b.to_int()
    r = _zresultant(list(A.coeffs), list(B.coeffs))
    return ca ** db * cb ** da * r


def discriminant(f: RatPoly) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f); zero iff f not squarefree."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def make_integral_monic(f: RatPoly) -> tuple[IntPoly, Fraction]:
    """Monic integral model of f: returns (g, scale) with g(y) = 0 iff f(y/scale) = 0.

    The roots of g are ``scale`` times the roots of f, so they are algebraic
    integers; ``scale`` is the denominator lcm times the absolute leading
    coefficient of the cleared polynomial.

    >>> g, s = make_integral_monic(RatPoly([-1, 0, 4]))
    >>> (str(g), s)
    ('x^2 - 4', Fraction(4, 1))
    """
    d = f.degree
    if d < 1:
        raise ValueError("cannot build a monic integral model of a constant")
    den = math.lcm(*(c.denominator for c in f.coeffs))
    cleared = [int(c * den) for c in f.coeffs]
    a = abs(cleared[-1])
    s = den * a
    lead = Fraction(f.lc)
    out = []
    for i, c in enumerate(f.coeffs):
        v = (c / lead) * Fraction(s) ** (d - i)
        if v.denominator != 1:
            raise AssertionError("integral model scaling failed")
        out.append(int(v))
    return IntPoly(out), Fraction(s)
