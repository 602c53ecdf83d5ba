"""Equivariant bifurcation indices for torus-symmetric elliptic systems."""

from ._eqbif import (
    ConsistencyError,
    Error,
    InputError,
    RefusalError,
    analyze,
    candidates,
    newton_branch,
    report,
    selftest,
    snf,
    stability_scan,
)

__all__ = [
    "ConsistencyError",
    "Error",
    "InputError",
    "RefusalError",
    "analyze",
    "candidates",
    "newton_branch",
    "report",
    "selftest",
    "snf",
    "stability_scan",
]
