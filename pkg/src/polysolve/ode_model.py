"""The equation class ``P(r) y'' + Q(r) y' - R(r) y = 0`` and its origin.

``P``, ``Q`` and ``R`` have degrees at most ``n``, ``n-1`` and ``n-2``;
their coefficients are the sequences ``alpha``, ``beta`` and ``tau``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidSpec, NoRealIndicialRoot, UnsupportedEquation
from .exact_core import Poly, radicand, scalar, sign, sqrt_exact


class SingularityClass(enum.Enum):
    ORDINARY = "Ordinary"
    REGULAR_SINGULAR = "RegularSingular"
    IRREGULAR = "Irregular"


class TheoremCase(enum.Enum):
    CASE1 = "Case1"  # alpha_0 != 0
    CASE2 = "Case2"  # alpha_0 = 0, alpha_1 != 0
    CASE3 = "Case3"  # alpha_0 = alpha_1 = beta_0 = 0, alpha_2 != 0
    UNSUPPORTED = "Unsupported"

    @property
    def supported(self):
        return self is not TheoremCase.UNSUPPORTED


@dataclass(frozen=True)
class OdeSpec:
    """Coefficient data of one equation of degree ``n``.

    >>> spec = OdeSpec(2, [1, 0, 0], [0, -2], [-4])
    >>> spec.P, spec.Q, spec.R
    (Poly([Fraction(1, 1)]), Poly([Fraction(0, 1), Fraction(-2, 1)]), Poly([Fraction(-4, 1)]))
    """

    n: int
    alpha: tuple
    beta: tuple
    tau: tuple

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise InvalidSpec(f"n must be an integer >= 2, got {n!r}")
        for name, want in (("alpha", n + 1), ("beta", n), ("tau", n - 1)):
            seq = getattr(self, name)
            try:
                vals = tuple(scalar(v) for v in seq)
            except TypeError as exc:
                raise InvalidSpec(f"{name}: {exc}") from exc
            if len(vals) != want:
                raise InvalidSpec(f"{name} must have length {want} for n={n}, got {len(vals)}")
            object.__setattr__(self, name, vals)
        if not self.alpha[n] and not self.beta[n - 1]:
            raise InvalidSpec("alpha_n and beta_{n-1} are both zero")
        self.radicand()

    @classmethod
    def from_polys(cls, P, Q, R, n=None):
        """Build a spec from the three polynomials, choosing the smallest
        admissible ``n`` unless one is given.
        """
        P, Q, R = Poly(P), Poly(Q), Poly(R)
        if n is None:
            n = max(2, P.degree, Q.degree + 1, R.degree + 2)
        return cls(n, [P[k] for k in range(n + 1)], [Q[k] for k in range(n)],
                   [R[k] for k in range(n - 1)])

    @property
    def P(self):
        return Poly(self.alpha)

    @property
    def Q(self):
        return Poly(self.beta)

    @property
    def R(self):
        return Poly(self.tau)

    def radicand(self):
        ds = {radicand(c) for c in self.alpha + self.beta + self.tau} - {0}
        if len(ds) > 1:
            raise DomainError(f"coefficients use several radicands {sorted(ds)}")
        return ds.pop() if ds else 0

    def coef(self, name, k):
        """Coefficient with out-of-range indices read as zero."""
        seq = getattr(self, name)
        return seq[k] if 0 <= k < len(seq) else Fraction(0)


@dataclass(frozen=True)
class IndicialRoots:
    roots: tuple
    case: TheoremCase


def classify_origin(spec):
    a, b = spec.alpha, spec.beta
    if a[0]:
        return SingularityClass.ORDINARY
    if a[1]:
        return SingularityClass.REGULAR_SINGULAR
    if a[2] and not b[0]:
        return SingularityClass.REGULAR_SINGULAR
    return SingularityClass.IRREGULAR


def theorem_case(spec):
    a, b = spec.alpha, spec.beta
    if a[0]:
        return TheoremCase.CASE1
    if a[1]:
        return TheoremCase.CASE2
    if a[2] and not b[0]:
        return TheoremCase.CASE3
    return TheoremCase.UNSUPPORTED


def indicial_roots(spec):
    """Admissible leading exponents ``s`` for ``y = r**s * (C_0 + ...)``.

    Case3 roots are listed with the larger-sign branch first.

    >>> indicial_roots(OdeSpec(2, [0, 0, 1], [0, 0], [2])).roots
    (Fraction(2, 1), Fraction(-1, 1))
    """
    case = theorem_case(spec)
    a, b, t = spec.alpha, spec.beta, spec.tau
    if case is TheoremCase.CASE1:
        roots = [Fraction(0)]
    elif case is TheoremCase.CASE2:
        roots = [Fraction(0), scalar(1 - b[0] / a[1])]
    elif case is TheoremCase.CASE3:
        lin = a[2] - b[1]
        disc = scalar(lin * lin + 4 * a[2] * t[0])
        if sign(disc) < 0:
            raise NoRealIndicialRoot(f"indicial discriminant {disc} is negative")
        root = sqrt_exact(disc)
        roots = [scalar((lin + root) / (2 * a[2])), scalar((lin - root) / (2 * a[2]))]
    else:
        raise UnsupportedEquation("the origin is an irregular singular point")
    unique = []
    for s in roots:
        if s not in unique:
            unique.append(s)
    return IndicialRoots(tuple(unique), case)


def indicial_polynomial(spec):
    """The quadratic in ``s`` whose roots :func:`indicial_roots` returns
    (Case2 and Case3), or ``s`` itself for Case1.
    """
    case = theorem_case(spec)
    a, b, t = spec.alpha, spec.beta, spec.tau
    if case is TheoremCase.CASE1:
        return Poly([0, 1])
    if case is TheoremCase.CASE2:
        # s(s-1) + (beta_0/alpha_1) s
        return Poly([0, b[0] / a[1] - 1, 1])
    if case is TheoremCase.CASE3:
        return Poly([-t[0], b[1] - a[2], a[2]])
    raise UnsupportedEquation("the origin is an irregular singular point")


def count_classes(n):
    """Census of the ``2**(n+1) - 1`` nonzero patterns by origin type.

    >>> count_classes(3)
    (8, 6, 1)
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return 2 ** n, 2 ** (n - 1) + 2 ** (n - 2), 2 ** (n - 2) - 1
