"""Exact scalars in a quadratic extension Q(sqrt(d)).

Values are stored as ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a
squarefree non-negative integer radicand ``d``.  Purely rational results are
returned as plain :class:`fractions.Fraction` objects, so the two types mix
freely and a rational QuadExt compares (and hashes) equal to its Fraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from ..errors import DomainError

_TRIAL_LIMIT = 10 ** 5


def _split_square(n):
    """Return ``(k, f)`` with ``n == k*k*f``; ``f`` is squarefree when
    ``n`` is small enough for trial division to settle it.
    """
    if n == 0:
        return 0, 0
    k, f = 1, n
    bound = min(_TRIAL_LIMIT, 1 << (f.bit_length() // 3 + 1))
    p = 2
    while p <= bound and p * p <= f:
        while f % (p * p) == 0:
            f //= p * p
            k *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(f)
    if r * r == f:
        k *= r
        f = 1
    return k, f


def _canon(b, d):
    """Rewrite ``b*sqrt(d)`` as ``b'*sqrt(f)`` with f a squarefree integer."""
    d = Fraction(d)
    if d < 0:
        raise DomainError(f"negative radicand {d}")
    if d == 0 or b == 0:
        return Fraction(0), 0
    # sqrt(p/q) = sqrt(p*q)/q
    k, f = _split_square(d.numerator * d.denominator)
    return Fraction(b) * k / d.denominator, f


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, bool):
        return Fraction(int(x))
    raise TypeError(f"not an exact rational: {x!r}")


class QuadExt:
    """An element ``a + b*sqrt(d)`` of a real quadratic field.

    Use :func:`make` or the arithmetic operators rather than the raw
    constructor when a possibly rational result is acceptable.

    >>> r = QuadExt.sqrt(8)
    >>> r
    QuadExt(0, 2, 2)
    >>> r * r
    Fraction(8, 1)
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        a = _as_fraction(a)
        b, d = _canon(_as_fraction(b), d)
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def sqrt(cls, x):
        """Exact square root of a non-negative rational."""
        return make(0, 1, x)

    # -- helpers --------------------------------------------------------
    def is_rational(self):
        return self.b == 0

    def parts(self):
        return self.a, self.b, self.d

    def conjugate(self):
        return make(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.d

    def sign(self):
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare magnitudes squared
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.d})"
        tail = rad if self.b == 1 else f"-{rad}" if self.b == -1 else f"{self.b}*{rad}"
        if self.a == 0:
            return tail
        return f"{self.a} + {tail}" if self.b > 0 else f"{self.a} - {tail.lstrip('-')}"

    def __eq__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        if isinstance(o, Fraction):
            return self.b == 0 and self.a == o
        if self.b == 0 or o.b == 0:
            return self.b == o.b and self.a == o.a
        try:
            d = _common_radicand(self, o)
        except DomainError:
            return False
        return self.a == o.a and _rescale(self, d) == _rescale(o, d)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    # -- arithmetic ------------------------------------------------------
    def __neg__(self):
        return make(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        if isinstance(o, Fraction):
            return make(self.a + o, self.b, self.d)
        d = _common_radicand(self, o)
        return make(self.a + o.a, _rescale(self, d) + _rescale(o, d), d)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        return (-self) + o

    def __mul__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        if isinstance(o, Fraction):
            return make(self.a * o, self.b * o, self.d)
        d = _common_radicand(self, o)
        b1, b2 = _rescale(self, d), _rescale(o, d)
        return make(self.a * o.a + b1 * b2 * d, self.a * b2 + b1 * o.a, d)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        if isinstance(o, Fraction):
            if o == 0:
                raise ZeroDivisionError("QuadExt division by zero")
            return make(self.a / o, self.b / o, self.d)
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Fraction(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def _coerce(x):
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars")
    return _as_fraction(x)


def _rescale(x, d):
    """Coefficient of sqrt(d) representing ``x.b*sqrt(x.d)``."""
    if x.b == 0 or x.d == d:
        return x.b
    # x.d/d is a rational square by construction of d
    q = Fraction(x.d, d)
    return x.b * _rational_sqrt(q)


def _common_radicand(x, y):
    if x.b == 0:
        return y.d
    if y.b == 0 or x.d == y.d:
        return x.d
    if _rational_sqrt(Fraction(x.d, y.d)) is None:
        raise DomainError(f"mixed radicands sqrt({x.d}) and sqrt({y.d})")
    return min(x.d, y.d)


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def make(a=0, b=0, d=0):
    """Canonical scalar for ``a + b*sqrt(d)``: a Fraction when rational."""
    q = QuadExt(a, b, d)
    return q.a if q.b == 0 else q


# -- scalar helpers shared by the rest of the package ----------------------

def scalar(x):
    """Normalize an int, Fraction or QuadExt into canonical scalar form."""
    if isinstance(x, QuadExt):
        return x.a if x.b == 0 else x
    return _coerce(x)


def sign(x):
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def is_rational(x):
    return not isinstance(x, QuadExt) or x.b == 0


def radicand(x):
    """Radicand of ``x`` (0 for rationals)."""
    return x.d if isinstance(x, QuadExt) and x.b != 0 else 0


def split(x):
    """``(a, b, d)`` for any scalar."""
    if isinstance(x, QuadExt):
        return x.a, x.b, x.d
    x = _coerce(x)
    return x, Fraction(0), 0


def sqrt_exact(x):
    """Square root of a non-negative scalar, exact when it lies in Q or in
    the field of ``x`` itself; otherwise DomainError.
    """
    x = scalar(x)
    if sign(x) < 0:
        raise DomainError(f"square root of negative value {x}")
    if isinstance(x, Fraction):
        return make(0, 1, x)
    # (p + q sqrt(d))^2 = x  gives  p^2 = (a +- sqrt(norm)) / 2, q = b / 2p
    a, b, d = x.a, x.b, x.d
    rn = _rational_sqrt(x.norm())
    if rn is not None:
        for cand in ((a + rn) / 2, (a - rn) / 2):
            p = _rational_sqrt(cand)
            if p:
                root = make(p, b / (2 * p), d)
                return root if sign(root) > 0 else -root
    raise DomainError(f"sqrt({x}) is not in Q(sqrt({d}))")
