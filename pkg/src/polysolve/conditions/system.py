"""Existence conditions as polynomials in one unknown parameter ``t``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import AllValuesAdmissible, DegenerateFamily, InvalidSpec, UnsupportedEquation
from ..exact_core import Poly, det_poly_matrix, reduce_quadratic_ext, scalar
from ..ode_model import OdeSpec, TheoremCase
from ..recurrence_engine import recurrence_entry
from .roots import RealRoot, _isolate_squarefree, _recover_rational, norm_poly, squarefree, vanishes_at


def _as_poly(x):
    return x if isinstance(x, Poly) else Poly([x])


@dataclass(frozen=True)
class ParamOdeSpec:
    """Like :class:`OdeSpec`, but every coefficient is a polynomial in ``t``."""

    n: int
    alpha: tuple
    beta: tuple
    tau: tuple

    def __post_init__(self):
        n = self.n
        if n < 2:
            raise InvalidSpec("n must be >= 2")
        for name, want in (("alpha", n + 1), ("beta", n), ("tau", n - 1)):
            vals = tuple(_as_poly(v) for v in getattr(self, name))
            if len(vals) != want:
                raise InvalidSpec(f"{name} must have length {want} for n={n}, got {len(vals)}")
            object.__setattr__(self, name, vals)
        if not self.alpha[n] and not self.beta[n - 1]:
            raise InvalidSpec("alpha_n and beta_{n-1} are both identically zero")

    def instantiate(self, t0):
        """The concrete :class:`OdeSpec` at ``t = t0``."""
        return OdeSpec(self.n, [p(t0) for p in self.alpha], [p(t0) for p in self.beta],
                       [p(t0) for p in self.tau])

    def theorem_case(self):
        a, b = self.alpha, self.beta
        if a[0]:
            return TheoremCase.CASE1
        if a[1]:
            return TheoremCase.CASE2
        if a[2] and not b[0]:
            return TheoremCase.CASE3
        return TheoremCase.UNSUPPORTED

    @property
    def max_degree(self):
        return max(p.degree for p in self.alpha + self.beta + self.tau)


@dataclass(frozen=True)
class ConditionSystem:
    necessary: Poly
    sufficient: tuple
    m: int
    s: object

    @property
    def labels(self):
        return tuple(f"S{k + 1}" for k in range(len(self.sufficient))) + ("NC",)

    def polys(self):
        """``(label, poly)`` pairs, necessary condition first."""
        return [("NC", self.necessary)] + [(f"S{k + 1}", p) for k, p in enumerate(self.sufficient)]


def parametric_matrix(pspec, m, s=0):
    """The recurrence matrix with Poly entries."""
    s = scalar(s)
    rows = []
    for l in range(m + pspec.n - 1):
        rows.append([_as_poly(recurrence_entry(pspec.alpha, pspec.beta, pspec.tau, l, i, s))
                     for i in range(m + 1)])
    return rows


def parametric_conditions(pspec, m, s=0, normalize=True):
    """Necessary and sufficient conditions with denominators cleared.

    Each sufficient condition is the determinant of the coefficient rows
    bordered by one condition row (all columns ``C_0..C_m``).  By the Schur
    complement this equals ``(-1)**m * det(A)`` times that row's residual,
    where ``A`` is the coefficient subsystem.
    """
    case = pspec.theorem_case()
    if not case.supported:
        raise UnsupportedEquation("the origin is an irregular singular point for generic t")
    s = scalar(s)
    M = parametric_matrix(pspec, m, s)
    start = 1 if case is TheoremCase.CASE3 else 0
    coef_rows = list(range(start, start + m))
    if m and not det_poly_matrix([[M[l][i] for i in range(1, m + 1)] for l in coef_rows]):
        raise DegenerateFamily("coefficient subsystem is singular for every t")
    n = pspec.n
    sufficient = []
    for l in range(m, m + n - 2):
        bordered = [M[r] for r in coef_rows] + [M[l]]
        sufficient.append(det_poly_matrix(bordered))
    e = m + s
    nc = pspec.tau[n - 2] - pspec.alpha[n] * (e * (e - 1)) - pspec.beta[n - 1] * e
    if normalize:
        sufficient = [p.content_normalized() for p in sufficient]
        nc = nc.content_normalized()
    return ConditionSystem(nc, tuple(sufficient), m, s)


# -- tridiagonal determinants ---------------------------------------------

@dataclass(frozen=True)
class TridiagSpec:
    """Diagonal ``S_0..S_m``, superdiagonal ``T_1..T_m``, subdiagonal
    ``G_1..G_m`` (entry ``(j-1, j)`` is ``T_j`` and ``(j, j-1)`` is ``G_j``).
    """

    S: tuple
    T: tuple
    G: tuple

    def __post_init__(self):
        for name in ("S", "T", "G"):
            object.__setattr__(self, name, tuple(_as_poly(v) for v in getattr(self, name)))
        k = len(self.S)
        if k < 1 or len(self.T) != k - 1 or len(self.G) != k - 1:
            raise ValueError("need len(S) >= 1 and len(T) == len(G) == len(S) - 1")

    @property
    def size(self):
        return len(self.S)

    def matrix(self):
        k = self.size
        M = [[Poly() for _ in range(k)] for _ in range(k)]
        for j in range(k):
            M[j][j] = self.S[j]
        for j in range(1, k):
            M[j - 1][j] = self.T[j - 1]
            M[j][j - 1] = self.G[j - 1]
        return M


def tridiagonal_determinant(tri):
    """Continuant: ``D_k = S_{k-1} D_{k-1} - T_{k-1} G_{k-1} D_{k-2}``."""
    prev, cur = Poly([1]), tri.S[0]
    for k in range(1, tri.size):
        prev, cur = cur, tri.S[k] * cur - tri.T[k - 1] * tri.G[k - 1] * prev
    return cur


def invsqrt_tridiag(l, m):
    """The ``(m+1) x (m+1)`` three-term system for the inverse square-root
    family on its necessary-condition branch, with ``t`` standing for
    ``sqrt(4 + 4l + 2m)``.
    """
    l = Fraction(l)
    t = Poly.x()
    S = [t * (2 * j + 3 + 4 * l) for j in range(m + 1)]
    T = [Poly([j * (j + 2 + 4 * l)]) for j in range(1, m + 1)]
    G = [Poly([2 * (m - j + 1)]) for j in range(1, m + 1)]
    return TridiagSpec(S, T, G)


def invsqrt_nonexistence(l, m):
    """``Delta_{m+1}`` evaluated in Q(sqrt(4+4l+2m)).  A nonzero value rules
    out a degree-m polynomial solution even though the necessary condition
    holds.

    >>> invsqrt_nonexistence(0, 1)
    Fraction(84, 1)
    """
    l = Fraction(l)
    d = 4 + 4 * l + 2 * m
    if m < 0 or d <= 0:
        raise ValueError("need m >= 0 and 4 + 4l + 2m > 0")
    return reduce_quadratic_ext(tridiagonal_determinant(invsqrt_tridiag(l, m)), d)


# -- common roots -----------------------------------------------------------

@dataclass(frozen=True)
class RootCheck:
    root: RealRoot
    holds: tuple  # (label, bool) pairs

    @property
    def common(self):
        return all(ok for _, ok in self.holds)


def check_roots(system):
    """Roots of the first non-trivial condition, each annotated with which
    conditions vanish there.
    """
    polys = system.polys()
    driver = next((p for _, p in polys if p), None)
    if driver is None:
        raise AllValuesAdmissible("every condition vanishes identically")
    F = squarefree(norm_poly(driver))
    out = []
    for lo, hi in _isolate_squarefree(F):
        if not vanishes_at(driver, F, lo, hi):
            continue
        holds = tuple((label, vanishes_at(p, F, lo, hi)) for label, p in polys)
        exact = _recover_rational(F, lo, hi)
        root = RealRoot(exact, exact, exact) if exact is not None else RealRoot(lo, hi)
        out.append(RootCheck(root, holds))
    return out


def common_roots(system):
    """Values of ``t`` where the necessary and all sufficient conditions
    vanish together.
    """
    return [rc.root for rc in check_roots(system) if rc.common]
