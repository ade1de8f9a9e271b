"""Dense univariate polynomials with exact scalar coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from ..errors import DomainError
from .quadext import QuadExt, make, radicand, scalar, split


class Poly:
    """Immutable polynomial ``c[0] + c[1]*x + ... + c[k]*x**k``.

    Coefficients are stored in ascending order with trailing zeros removed,
    so the zero polynomial is the empty tuple and structural equality is
    mathematical equality.

    >>> p = Poly([1, 1]) * Poly([1, -1])
    >>> p.coeffs
    (Fraction(1, 1), Fraction(0, 1), Fraction(-1, 1))
    >>> p.degree
    2
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            c = list(coeffs.coeffs)
        else:
            c = [scalar(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly([other]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)

    def is_rational(self):
        return all(not isinstance(c, QuadExt) for c in self.coeffs)

    def radicand(self):
        ds = {radicand(c) for c in self.coeffs} - {0}
        if len(ds) > 1:
            raise DomainError(f"mixed radicands {sorted(ds)}")
        return ds.pop() if ds else 0

    # -- ring operations ----------------------------------------------
    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar, a float or a Poly."""
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        acc = Poly() if isinstance(x, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def scale(self, c):
        return Poly([c * a for a in self.coeffs])

    def shift(self, k):
        """Multiply by ``x**k``."""
        return Poly([0] * k + list(self.coeffs)) if self.coeffs else self

    def compose(self, q):
        return self(q)

    def __divmod__(self, other):
        o = _lift(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        inv = 1 / o.lead
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if not c:
                continue
            quot[k - dq] = c
            for j, b in enumerate(o.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(1 / self.lead)

    def content_normalized(self):
        """Primitive integer form with positive leading coefficient when
        the coefficients are rational; monic otherwise.
        """
        if not self.coeffs:
            return self
        if not self.is_rational():
            return self.monic()
        return primitive_part(self)

    def split_radical(self):
        """Return ``(A, B, d)`` with ``self == A + B*sqrt(d)``, A and B rational."""
        d = self.radicand()
        a_part, b_part = [], []
        for c in self.coeffs:
            a, b, dc = split(c)
            if dc and dc != d:
                b = (make(0, b, dc) / make(0, 1, d))
            a_part.append(a)
            b_part.append(b)
        return Poly(a_part), Poly(b_part), d


def _lift(x):
    if isinstance(x, Poly):
        return x
    try:
        return Poly([x])
    except TypeError:
        return None


def primitive_part(p):
    """Integer primitive part of a rational polynomial, leading coefficient > 0."""
    if not p.coeffs:
        return p
    den = 1
    for c in p.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return Poly([Fraction(v, g) for v in ints])


def poly_gcd(a, b):
    """Monic greatest common divisor (zero if both are zero)."""
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def exact_div(a, b):
    """Quotient ``a / b``; raises ArithmeticError if the remainder is nonzero."""
    q, r = divmod(a, b)
    if r.coeffs:
        raise ArithmeticError("inexact polynomial division")
    return q


def poly_arith(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul"} to two polynomials."""
    a, b = _lift(a), _lift(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_derivative(a):
    return _lift(a).derivative()


def reduce_quadratic_ext(p, d):
    """Evaluate ``p`` at ``t = sqrt(d)``, i.e. reduce it modulo ``t**2 - d``.

    >>> reduce_quadratic_ext(Poly([-6, 0, 15]), 6)
    Fraction(84, 1)
    """
    d = Fraction(d)
    if d < 0:
        raise DomainError(f"negative radicand {d}")
    even = odd = Fraction(0)
    power = Fraction(1)
    for k, c in enumerate(p.coeffs):
        if k % 2 == 0:
            even = even + c * power
        else:
            odd = odd + c * power
            power = power * d
    return scalar(even + odd * make(0, 1, d))


def format_poly(p, var="t"):
    if not p.coeffs:
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        cs = str(c)
        if isinstance(c, QuadExt) and c.a and c.b:
            cs = f"({cs})"
        if k == 0:
            terms.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{cs}*{mono}")
    return " + ".join(terms).replace("+ -", "- ")
