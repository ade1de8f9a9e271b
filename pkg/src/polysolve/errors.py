"""Exception hierarchy shared by every polysolve module."""


class PolysolveError(Exception):
    """Base class for all library errors."""


class DomainError(PolysolveError, ValueError):
    """Arithmetic outside the supported field, e.g. two different radicands."""


class InvalidSpec(PolysolveError, ValueError):
    pass


class SingularSystem(PolysolveError):
    """A square linear system has no unique solution."""

    def __init__(self, rank, size):
        super().__init__(f"singular {size}x{size} system (rank {rank})")
        self.rank = rank
        self.size = size


class InvariantViolation(PolysolveError, AssertionError):
    """An internal exactness invariant failed. Always a bug."""


class NoRealIndicialRoot(PolysolveError):
    pass


class UnsupportedEquation(PolysolveError):
    """The origin is an irregular singular point (outside the three theorem cases)."""


class DegenerateSystem(PolysolveError):
    """The coefficient subsystem cannot determine C_1..C_m."""


class DegenerateFamily(PolysolveError):
    """The coefficient subsystem is singular for every value of the unknown."""


class AllValuesAdmissible(PolysolveError):
    """Root search on the zero polynomial: every value is a root."""


class ResonantIndex(PolysolveError):
    def __init__(self, index):
        super().__init__(f"recurrence denominator vanishes at k={index} (logarithmic case)")
        self.index = index


class PoleInParameters(PolysolveError):
    pass


class InvalidExponent(PolysolveError):
    pass


class ConsistencyError(PolysolveError):
    """The recurrence engine and the independent verifier disagree."""


class JobError(PolysolveError, ValueError):
    """Malformed job document."""
