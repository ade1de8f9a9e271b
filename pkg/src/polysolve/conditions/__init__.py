"""Parametric existence conditions and their real roots."""

from .roots import (RealRoot, cauchy_bound, isolate_real_roots, rational_roots,
                    real_roots, squarefree, sturm_chain, vanishes_at)
from .system import (ConditionSystem, ParamOdeSpec, RootCheck, TridiagSpec,
                     check_roots, common_roots, invsqrt_nonexistence,
                     invsqrt_tridiag, parametric_conditions, parametric_matrix,
                     tridiagonal_determinant)

__all__ = [
    "RealRoot", "cauchy_bound", "isolate_real_roots", "rational_roots",
    "real_roots", "squarefree", "sturm_chain", "vanishes_at",
    "ConditionSystem", "ParamOdeSpec", "RootCheck", "TridiagSpec",
    "check_roots", "common_roots", "invsqrt_nonexistence", "invsqrt_tridiag",
    "parametric_conditions", "parametric_matrix", "tridiagonal_determinant",
]
