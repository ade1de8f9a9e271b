"""Real roots of univariate polynomials, certified with Sturm sequences.

Polynomials with coefficients in Q(sqrt(d)) are handled through their
rational norm ``A**2 - d*B**2`` (where ``p = A + B*sqrt(d)``), whose roots
contain those of ``p``; membership is then decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import AllValuesAdmissible
from ..exact_core import Poly, poly_gcd, primitive_part, sign

_REFINE_BITS = 30


@dataclass(frozen=True)
class RealRoot:
    """A real root known to lie in ``[lo, hi]`` (a point when exact)."""

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    @property
    def approx(self):
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)

    def __str__(self):
        if self.exact is not None:
            return str(self.exact)
        return f"[{self.lo}, {self.hi}]"


def squarefree(p):
    """``p / gcd(p, p')`` made primitive."""
    g = poly_gcd(p, p.derivative())
    return primitive_part(p // g) if p.is_rational() else (p // g).monic()


def cauchy_bound(p):
    """Every real root lies strictly inside ``(-B, B)``."""
    lead = abs(Fraction(p.lead))
    return 1 + max((abs(Fraction(c)) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def sturm_chain(p):
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if not r:
            break
        chain.append(-r)
    return chain


def _variations(chain, x):
    signs = [sign(q(x)) for q in chain]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_open(chain, lo, hi):
    """Number of distinct roots of ``chain[0]`` strictly inside ``(lo, hi)``."""
    if lo >= hi:
        return 0
    n = _variations(chain, lo) - _variations(chain, hi)
    return n - (1 if not chain[0](hi) else 0)


def _split_point(f, lo, hi):
    """Interior point of ``(lo, hi)`` that is not a root of ``f``, preferring
    the midpoint.
    """
    k = 2
    while True:
        for j in range(1, k):
            x = lo + (hi - lo) * Fraction(j, k)
            if f(x):
                return x
        k += 1


def _bisect(f, lo, hi):
    """Halve an isolating interval of the simple root of ``f``."""
    mid = (lo + hi) / 2
    fm = f(mid)
    if not fm:
        return mid, mid
    if sign(f(lo)) * sign(fm) < 0:
        return lo, mid
    return mid, hi


def refine(f, lo, hi, width):
    """Shrink ``(lo, hi)``, which isolates a simple root of ``f`` and has
    non-root endpoints, until ``hi - lo <= width`` (or the root is hit).
    """
    while hi - lo > width:
        lo, hi = _bisect(f, lo, hi)
    return lo, hi


def _isolate_squarefree(f):
    if f.degree <= 0:
        return []
    chain = sturm_chain(f)
    B = cauchy_bound(f)
    out, stack = [], [(-B, B)]
    while stack:
        a, b = stack.pop()
        c = count_open(chain, a, b)
        if c == 0:
            continue
        if c == 1:
            out.append((a, b))
            continue
        mid = _split_point(f, a, b)
        stack += [(a, mid), (mid, b)]
    width = B / 2 ** _REFINE_BITS
    refined = []
    for a, b in out:
        if a != b:
            a, b = refine(f, a, b, width)
        refined.append((a, b))
    return sorted(refined)


def norm_poly(p):
    """Rational polynomial whose real roots include those of ``p``."""
    if p.is_rational():
        return p
    A, Bp, d = p.split_radical()
    return A * A - Bp * Bp * d


def isolate_real_roots(p):
    """Disjoint isolating intervals ``(lo, hi)``, one per distinct real root,
    sorted ascending.  An exactly located root gives ``lo == hi``.

    >>> isolate_real_roots(Poly([-3, 1]))
    [(Fraction(3, 1), Fraction(3, 1))]
    """
    if not p:
        raise AllValuesAdmissible("the zero polynomial vanishes everywhere")
    F = squarefree(norm_poly(p))
    ivals = _isolate_squarefree(F)
    if p.is_rational():
        return ivals
    return [iv for iv in ivals if vanishes_at(p, F, *iv)]


def _has_root_open(g, lo, hi):
    if not g or g.degree <= 0:
        return not g
    g = squarefree(g)
    return count_open(sturm_chain(g), lo, hi) > 0


def vanishes_at(q, F, lo, hi):
    """Does ``q`` vanish at the unique root of ``F`` inside ``(lo, hi)``?

    ``F`` is a squarefree rational polynomial and ``(lo, hi)`` isolates one of
    its roots (``lo == hi`` means the root is ``lo`` exactly).  The answer is
    exact: it relies on gcds and sign tests, never on a tolerance.
    """
    if not q:
        return True
    if lo == hi:
        return not q(lo)
    if q.is_rational():
        return _has_root_open(poly_gcd(F, q), lo, hi)
    A, B, d = q.split_radical()
    if _has_root_open(poly_gcd(F, poly_gcd(A, B)), lo, hi):
        return True
    if not _has_root_open(poly_gcd(F, A * A - B * B * d), lo, hi):
        return False
    # now |A| = sqrt(d)|B| != 0 at the root; shrink until A and B keep one sign
    chains = [sturm_chain(squarefree(P)) for P in (A, B) if P.degree > 0]
    while any(count_open(c, lo, hi) or not c[0](lo) or not c[0](hi) for c in chains):
        lo, hi = _bisect(F, lo, hi)
        if lo == hi:
            return not q(lo)
    return sign(A(lo)) * sign(B(lo)) < 0


def _recover_rational(F, lo, hi):
    """Exact rational root of the primitive integer polynomial ``F`` in the
    isolating interval, or None.
    """
    if lo == hi:
        return lo
    lead = abs(int(F.lead))
    lo, hi = refine(F, lo, hi, Fraction(1, 4 * lead * lead))
    if lo == hi:
        return lo
    cand = ((lo + hi) / 2).limit_denominator(lead)
    return cand if lo < cand < hi and not F(cand) else None


def real_roots(p):
    """:class:`RealRoot` objects for every distinct real root of ``p``."""
    if not p:
        raise AllValuesAdmissible("the zero polynomial vanishes everywhere")
    F = squarefree(norm_poly(p))
    out = []
    for lo, hi in _isolate_squarefree(F):
        if not p.is_rational() and not vanishes_at(p, F, lo, hi):
            continue
        exact = _recover_rational(F, lo, hi)
        if exact is not None:
            out.append(RealRoot(exact, exact, exact))
        else:
            out.append(RealRoot(lo, hi))
    return out


def rational_roots(p):
    """All rational roots of ``p``, ascending, each confirmed exactly.

    >>> rational_roots(Poly([-4, 0, 1]))
    [Fraction(-2, 1), Fraction(2, 1)]
    """
    if not p:
        raise AllValuesAdmissible("the zero polynomial vanishes everywhere")
    if not p.is_rational():
        A, B, _ = p.split_radical()
        p = poly_gcd(A, B)
        if p.degree <= 0:
            return []
    F = squarefree(p)
    roots = []
    for lo, hi in _isolate_squarefree(F):
        r = _recover_rational(F, lo, hi)
        if r is not None:
            roots.append(r)
    return roots
