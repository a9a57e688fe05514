"""Exact log-K-stability invariants of toric Fano polytopes.

All rational quantities cross the boundary as ``fractions.Fraction``; inputs
may be ints, Fractions or strings such as ``"21/25"``.
"""

from ._core import (
    CoeffTuple,
    Error,
    Polytope,
    classify,
    critical_beta,
    existence_check,
    exit_point,
    fit_expansions,
    log_futaki_algebraic,
    log_futaki_p1,
    log_futaki_toric,
    mean_scalar,
    q_beta,
    r_invariant,
    sample_series,
    stability_check,
    sweep,
)

__all__ = [
    "CoeffTuple",
    "Error",
    "Polytope",
    "classify",
    "critical_beta",
    "existence_check",
    "exit_point",
    "fit_expansions",
    "log_futaki_algebraic",
    "log_futaki_p1",
    "log_futaki_toric",
    "mean_scalar",
    "q_beta",
    "r_invariant",
    "sample_series",
    "stability_check",
    "sweep",
]
