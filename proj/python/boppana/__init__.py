"""Certified evaluation of alpha_k h(x^k) >= x^(k-1) h(x) and related checks.

Scalar functions return floats. Enclosures are (lo, hi) tuples. Reports are
plain dicts with the same layout as the command-line JSON output.
"""

import json

from . import _core
from ._core import (
    CertificationError,
    DomainError,
    defect,
    entropy,
    is_union_closed,
    log_mean,
    q,
    scan,
    u_fn,
    u_residual,
)

__all__ = [
    "CertificationError",
    "DomainError",
    "certify",
    "closure_stats",
    "defect",
    "entropy",
    "equality_point",
    "exhaustive_check",
    "frequency_threshold",
    "is_union_closed",
    "log_mean",
    "q",
    "random_probe",
    "scan",
    "solve_alpha",
    "u_fn",
    "u_residual",
]

DEFAULT_TOL = 1e-12


def solve_alpha(k, tol=DEFAULT_TOL):
    """Certificate for the root of x(1+x)^(k-1) = 1; "lo"/"hi" are decimal strings."""
    return json.loads(_core.solve_alpha_json(k, tol))


def equality_point(k, tol=DEFAULT_TOL):
    return _core.equality_point(k, tol)


def frequency_threshold(k, tol=DEFAULT_TOL):
    return _core.frequency_threshold(k, tol)


def certify(k, exclusion_radius=1e-3, max_depth=40, tol=DEFAULT_TOL, workers=1):
    return json.loads(_core.certify_json(k, exclusion_radius, max_depth, tol, workers))


def closure_stats(n, sets, k=2):
    """Closure statistics of a family given as lists of 1-based elements."""
    return json.loads(_core.closure_stats_json(n, [list(s) for s in sets], k))


def exhaustive_check(n, k=2, workers=1):
    return json.loads(_core.exhaustive_check_json(n, k, workers))


def random_probe(n, k=2, trials=1000, seed=0, workers=1):
    return json.loads(_core.random_probe_json(n, k, trials, seed, workers))
