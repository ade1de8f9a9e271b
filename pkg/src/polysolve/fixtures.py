"""Constructors for the worked equations used by the demos and tests."""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .conditions import ParamOdeSpec
from .errors import DomainError, InvalidSpec
from .exact_core import Poly, make, scalar, sign
from .ode_model import OdeSpec


def _exact_fields(obj):
    # ints would turn divisions below into floats
    for f in fields(obj):
        object.__setattr__(obj, f.name, scalar(getattr(obj, f.name)))


@dataclass(frozen=True)
class HeunParams:
    """Parameters of the general Heun equation.  ``a`` is the finite
    singular point besides 0 and 1 (exposed also as ``c``).  The Fuchsian
    relation ``epsilon = alpha + beta - gamma - delta + 1`` is not imposed.
    """

    a: object
    gamma: object
    delta: object
    epsilon: object
    alpha: object
    beta: object
    q: object

    def __post_init__(self):
        _exact_fields(self)

    @property
    def c(self):
        return self.a

    @property
    def fuchsian(self):
        return self.epsilon == self.alpha + self.beta - self.gamma - self.delta + 1


def build_heun(p, alpha2="table"):
    """Cubic-coefficient (n = 3) spec for the Heun equation.

    ``alpha2="table"`` uses ``alpha_2 = -(1 - c)`` as tabulated for the
    canonical substitution.  ``alpha2="expanded"`` uses ``-(1 + c)``, the
    coefficient of ``r**2`` in ``r (r - 1)(r - c)``, which is the value that
    matches the ``beta`` row.
    """
    c = scalar(p.c)
    a2 = {"table": -(1 - c), "expanded": -(1 + c)}[alpha2]
    alpha = (0, c, a2, 1)
    beta = (p.gamma * c, -(c * (p.delta + p.gamma) + p.epsilon + p.gamma),
            p.delta + p.epsilon + p.gamma)
    tau = (p.q, -p.alpha * p.beta)
    return OdeSpec(3, alpha, beta, tau)


@dataclass(frozen=True)
class DiracParams:
    """Planar Dirac electron in a Coulomb plus uniform magnetic field.

    ``gamma`` is supplied directly rather than computed from ``l`` and
    ``Z e^2``, so every quantity stays exact.  ``E`` may be a QuadExt.
    """

    E: object
    M: object
    l: object
    gamma: object
    Z: object
    e: object
    B: object

    def __post_init__(self):
        _exact_fields(self)
        if not scalar(self.E + self.M):
            raise InvalidSpec("E + M must be nonzero")

    @property
    def r0(self):
        return scalar(self.Z * self.e ** 2 / (self.E + self.M))

    @property
    def beta_coef(self):
        return scalar(2 * self.gamma + 1)

    @property
    def a(self):
        return scalar(2 * self.E * self.Z * self.e ** 2)

    @property
    def eps(self):
        return scalar(self.E ** 2 - self.M ** 2 - self.e * self.B * (self.l + Fraction(5, 2) + self.gamma))

    @property
    def c(self):
        return scalar(self.gamma - self.l - Fraction(1, 2))


def dirac_energy(e, B, l, gamma, M, m):
    """Positive root of ``E^2 = eB(m + l + gamma + 3/2) + M^2``."""
    val = scalar(e * B * (m + l + gamma + Fraction(3, 2)) + M * M)
    if sign(val) < 0:
        raise DomainError("no real energy on this branch")
    return make(0, 1, val)


def build_dirac(p):
    """Spec for ``r(r + r0) Q'' - (eB r^3 + eB r0 r^2 - (beta-1) r - beta r0) Q'
    + ((eB + eps) r^2 + (eps r0 + a) r + c - a r0) Q = 0``.

    The first-derivative coefficient is cubic, so the equation sits in the
    n = 4 slot with ``alpha_3 = alpha_4 = 0``.
    """
    r0, b, eB = p.r0, p.beta_coef, p.e * p.B
    alpha = (0, r0, 1, 0, 0)
    beta = (b * r0, b - 1, -eB * r0, -eB)
    tau = (p.a * r0 - p.c, -(p.eps * r0 + p.a), -(eB + p.eps))
    return OdeSpec(4, alpha, beta, tau)


def build_dirac_parametric(M, l, gamma, Z, e, B):
    """The Dirac equation multiplied through by ``E + M``, with the energy
    ``E`` as the unknown ``t``.
    """
    t = Poly.x()
    w = t + M  # E + M
    ze2 = Z * e ** 2
    eB = e * B
    b = 2 * gamma + 1
    c = gamma - l - Fraction(1, 2)
    eps = t * t - M * M - eB * (l + Fraction(5, 2) + gamma)
    a = t * (2 * ze2)
    alpha = (0, ze2, w, 0, 0)
    beta = (b * ze2, w * (b - 1), -eB * ze2, w * (-eB))
    tau = (a * ze2 - w * c, -(eps * ze2 + a * w), -(w * (eps + eB)))
    return ParamOdeSpec(4, alpha, beta, tau)


@dataclass(frozen=True)
class InvSqrtParams:
    """Inverse square-root potential reduced to a biconfluent Heun form."""

    l: object
    lam: object

    def __post_init__(self):
        _exact_fields(self)
        if sign(self.lam) >= 0:
            raise InvalidSpec("lambda must be negative")

    @classmethod
    def on_nc_branch(cls, l, m):
        """``lambda = -sqrt(4 + 4l + 2m)``, where the necessary condition holds."""
        return cls(l, -make(0, 1, 4 + 4 * Fraction(l) + 2 * m))


def build_invsqrt(p):
    l, lam = scalar(p.l), scalar(p.lam)
    alpha = (0, 1, 0, 0)
    beta = (3 + 4 * l, -2 * lam, -2)
    tau = ((3 + 4 * l) * lam, 4 * (l + 1) - lam * lam)
    return OdeSpec(3, alpha, beta, tau)


def hermite_spec(nu=2):
    """``y'' - 2 r y' + 2 nu y = 0``."""
    return OdeSpec(2, (1, 0, 0), (0, -2), (-2 * nu,))


def cauchy_euler_spec(a2=1, b1=0, t0=2):
    """``a2 r^2 y'' + b1 r y' - t0 y = 0``."""
    return OdeSpec(2, (0, 0, a2), (0, b1), (t0,))


def heun_example_spec():
    """A Heun-type equation with the first-degree solution ``1 + 2r``."""
    return OdeSpec(3, (0, 1, 1, 1), (1, 3, 2), (2, 2))


# Dirac parameters at which all three m = 0 conditions vanish together (E = 2).
DIRAC_COMMON_ROOT = dict(M=1, l=Fraction(-37, 24), gamma=Fraction(7, 24), Z=1, e=1, B=12)
