"""Equations whose power series obey a two-term recurrence.

An equation ``p2 u'' + p1 u' + p0 u = 0`` qualifies when, for some integer
shift ``m`` and gap ``h >= 1``, every ``q_j = p_j * r**(m-j)`` is a polynomial
supported on the exponents ``{0, h}``.  The series ``u = r**lam * sum c_k r**k``
then satisfies ``c_k = -N(k)/D(k) * c_{k-h}`` and sums to a hypergeometric
function of ``r**h``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidExponent, InvariantViolation, NoRealIndicialRoot, ResonantIndex
from .exact_core import Poly, exact_div, scalar, sign, sqrt_exact


@dataclass(frozen=True)
class ScheffeForm:
    """``q[j] = (q_{j,0}, q_{j,h})`` for ``j = 0, 1, 2``."""

    m_shift: int
    h: int
    q: tuple

    def polys(self):
        """Reconstruct ``(p2, p1, p0)``."""
        out = []
        for j in (2, 1, 0):
            p = Poly()
            for e, c in zip((j - self.m_shift, j - self.m_shift + self.h), self.q[j]):
                if not c:
                    continue
                if e < 0:
                    raise DomainError(f"p_{j} would contain r**{e}")
                p = p + Poly.monomial(e, c)
            out.append(p)
        return tuple(out)


def _lowest(p):
    return next(k for k, c in enumerate(p.coeffs) if c)


def detect_scheffe(p2, p1, p0):
    """Return the :class:`ScheffeForm` of ``p2 u'' + p1 u' + p0 u`` or None.

    The shift is the unique ``m`` making the smallest exponent among the
    ``q_j`` equal to zero; the gap is then read off the single remaining
    exponent.

    >>> detect_scheffe(Poly([1, 0, -1]), Poly([0, -2]), Poly([2]))
    ScheffeForm(m_shift=2, h=2, q=((Fraction(0, 1), Fraction(2, 1)), (Fraction(0, 1), Fraction(-2, 1)), (Fraction(1, 1), Fraction(-1, 1))))
    """
    ps = (Poly(p0), Poly(p1), Poly(p2))
    if not ps[2]:
        raise ValueError("p2 must not be identically zero")
    m = -min(_lowest(p) - j for j, p in enumerate(ps) if p)
    exps = set()
    for j, p in enumerate(ps):
        exps |= {k + m - j for k, c in enumerate(p.coeffs) if c}
    exps.discard(0)
    if len(exps) != 1:
        return None
    h = exps.pop()
    q = tuple((p[j - m], p[j - m + h]) for j, p in enumerate(ps))
    return ScheffeForm(m, h, q)


def scheffe_from_spec(spec):
    """Detect the form of ``P y'' + Q y' - R y = 0``."""
    return detect_scheffe(spec.P, spec.Q, -spec.R)


def _indicial_poly(form):
    (q00, _), (q10, _), (q20, _) = form.q
    return Poly([q00, q10 - q20, q20])


def indicial_roots_scheffe(form):
    """Roots of ``q20 lam (lam-1) + q10 lam + q00 = 0``, ascending.

    >>> indicial_roots_scheffe(detect_scheffe(Poly([1, 0, -1]), Poly([0, -2]), Poly([2])))
    (Fraction(0, 1), Fraction(1, 1))
    """
    p = _indicial_poly(form)
    if p.degree < 1:
        raise ValueError("indicial equation is degenerate (q20 = q10 = 0)")
    if p.degree == 1:
        return (scalar(-p[0] / p[1]),)
    a, b, c = p[2], p[1], p[0]
    disc = scalar(b * b - 4 * a * c)
    if sign(disc) < 0:
        raise NoRealIndicialRoot(f"indicial discriminant {disc} is negative")
    root = sqrt_exact(disc)
    r1, r2 = scalar((-b - root) / (2 * a)), scalar((-b + root) / (2 * a))
    if r1 == r2:
        return (r1,)
    return (r1, r2) if r1 < r2 else (r2, r1)


@dataclass(frozen=True)
class TwoTermRecurrence:
    """``c_k = -N(k)/D(k) * c_{k-h}``, with N and D stored as Polys in k."""

    lam: object
    h: int
    N: Poly
    D: Poly

    def multiplier(self, k):
        return scalar(-self.N(Fraction(k)) / self.D(Fraction(k)))


def two_term_recurrence(form, lam):
    lam = scalar(lam)
    (q00, q0h), (q10, q1h), (q20, q2h) = form.q
    h = form.h
    K = Poly([lam - h, 1])
    L = Poly([lam, 1])
    N = K * (K - 1) * q2h + K * q1h + q0h
    D = L * (L - 1) * q20 + L * q10 + q00
    if D(Fraction(0)):
        raise InvalidExponent(f"lambda = {lam} is not an indicial root")
    return TwoTermRecurrence(lam, h, N, D)


def series_coefficients(rec, count):
    """Exact ``c_0..c_count`` with ``c_0 = 1``; zero off the h-grid."""
    c = [Fraction(1)]
    for k in range(1, count + 1):
        if k % rec.h:
            c.append(Fraction(0))
            continue
        num = scalar(rec.N(Fraction(k)) * c[k - rec.h])
        den = rec.D(Fraction(k))
        if not den:
            if num:
                raise ResonantIndex(k)
            c.append(Fraction(0))
            continue
        c.append(scalar(-num / den))
    return c


@dataclass(frozen=True)
class HypergeometricRep:
    """``r**lam * pFq(upper; lower; scale * r**h)``.

    ``upper_poly`` is the monic product ``prod(k + a_i)``; ``upper_params``
    lists the ``a_i`` when they lie in the coefficient field and is None
    otherwise, in which case ``upper_pair`` gives their (sum, product).
    """

    upper_params: tuple | None
    upper_poly: Poly
    lower_params: tuple
    argument_scale: object
    power_h: int
    prefactor_exponent: object

    @property
    def upper_pair(self):
        if self.upper_poly.degree != 2:
            return None
        return self.upper_poly[1], self.upper_poly[0]

    @property
    def argument_scale_float(self):
        return float(self.argument_scale)

    @property
    def order(self):
        """``(p, q)`` of the pFq, counting the implicit factorial."""
        return max(self.upper_poly.degree, 0), len(self.lower_params)


def _linear_params(p):
    """``a`` values with ``p = lead * prod(k + a)`` for degree <= 2, or None."""
    if p.degree <= 0:
        return ()
    if p.degree == 1:
        return (scalar(p[0] / p[1]),)
    b, c = p[1] / p[2], p[0] / p[2]
    disc = scalar(b * b - 4 * c)
    try:
        if sign(disc) < 0:
            return None
        root = sqrt_exact(disc)
    except DomainError:
        return None
    return tuple(sorted((scalar((b - root) / 2), scalar((b + root) / 2)), key=float))


def hypergeometric_params(form, lam, check_terms=11):
    """Factor the term ratio ``-N(hk+h)/D(hk+h)`` into pFq parameters.

    ``D(hk+h)`` always carries the factor ``k+1`` because ``lam`` is an
    indicial root; the rest gives the lower parameter.  The identity is
    re-checked exactly for ``k < check_terms``.
    """
    rec = two_term_recurrence(form, lam)
    h = form.h
    grid = Poly([h, h])
    Nk = rec.N(grid)
    Dk = exact_div(rec.D(grid), Poly([1, 1]))
    if not Nk:
        rep = HypergeometricRep((Fraction(0),), Poly([0, 1]), (), Fraction(1), h, rec.lam)
    else:
        lower = _linear_params(Dk)
        if lower is None:
            raise InvariantViolation("denominator of the term ratio has degree > 2")
        upper = _linear_params(Nk)
        scale = scalar(-Nk.lead / Dk.lead)
        rep = HypergeometricRep(upper, Nk.monic(), lower, scale, h, rec.lam)
    _check_term_ratio(rep, Nk, Dk, check_terms)
    return rep


def _check_term_ratio(rep, Nk, Dk, count):
    for k in range(count):
        kk = Fraction(k)
        den = (kk + 1) * Dk(kk)
        if not den:
            continue
        lhs = scalar(-Nk(kk) / den)
        if rep.upper_params is None:
            top = rep.upper_poly(kk)
        else:
            top = Fraction(1)
            for a in rep.upper_params:
                top = top * (kk + a)
        low = kk + 1
        for b in rep.lower_params:
            low = low * (kk + b)
        if not low or lhs != scalar(rep.argument_scale * top / low):
            raise InvariantViolation(f"term ratio mismatch at k={k}")
        if not lhs:
            break  # the series has terminated


def termination_degree(rec):
    """Smallest grid index ``k >= h`` with ``N(k) = 0``, or None.

    Past that index every coefficient vanishes, leaving a polynomial of
    degree ``lam + k - h``.
    """
    from .conditions.roots import rational_roots

    if not rec.N:
        return rec.h
    ks = [r for r in rational_roots(rec.N)
          if r.denominator == 1 and r >= rec.h and r % rec.h == 0]
    return int(min(ks)) if ks else None


@dataclass(frozen=True)
class FamilyTemplate:
    """One generic solvable equation of degree ``n``::

        (alpha_k r^k + alpha_n r^n) y'' + (beta_{k-1} r^{k-1} + beta_{n-1} r^{n-1}) y'
            + (eps_{k-2} r^{k-2} + eps_{n-2} r^{n-2}) y = 0

    Terms with a negative index are absent.
    """

    n: int
    k: int
    m_shift: int
    h: int

    @property
    def parameters(self):
        n, k = self.n, self.k
        names = [f"alpha_{k}", f"alpha_{n}"]
        if k >= 1:
            names.append(f"beta_{k - 1}")
        names.append(f"beta_{n - 1}")
        if k >= 2:
            names.append(f"eps_{k - 2}")
        names.append(f"eps_{n - 2}")
        return tuple(names)

    def instantiate(self, values):
        """``(p2, p1, p0)`` for a mapping from parameter name to value."""
        n, k = self.n, self.k
        v = {name: scalar(values[name]) for name in self.parameters}
        p2 = Poly.monomial(k, v[f"alpha_{k}"]) + Poly.monomial(n, v[f"alpha_{n}"])
        p1 = Poly.monomial(n - 1, v[f"beta_{n - 1}"])
        if k >= 1:
            p1 = p1 + Poly.monomial(k - 1, v[f"beta_{k - 1}"])
        p0 = Poly.monomial(n - 2, v[f"eps_{n - 2}"])
        if k >= 2:
            p0 = p0 + Poly.monomial(k - 2, v[f"eps_{k - 2}"])
        return p2, p1, p0

    def __str__(self):
        n, k = self.n, self.k

        def term(c, e):
            return c if e == 0 else f"{c} r" if e == 1 else f"{c} r^{e}"
        p2 = f"({term(f'alpha_{k}', k)} + {term(f'alpha_{n}', n)}) y''"
        p1 = [term(f"beta_{k - 1}", k - 1)] if k >= 1 else []
        p1.append(term(f"beta_{n - 1}", n - 1))
        p0 = [term(f"eps_{k - 2}", k - 2)] if k >= 2 else []
        p0.append(term(f"eps_{n - 2}", n - 2))
        return f"{p2} + ({' + '.join(p1)}) y' + ({' + '.join(p0)}) y = 0"


def generic_families(n):
    """The ``n`` templates with ``(m, h) = (2-k, n-k)``, ``k = 0..n-1``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return [FamilyTemplate(n, k, 2 - k, n - k) for k in range(n)]
