"""Exact Milnor/Tjurina invariants of isolated hypersurface singularities.

Thin wrapper around the C++ core: polynomials are strings over a declared
variable list, all arithmetic is exact rational, and ``analyze`` returns the
same canonical report the ``germlab`` CLI emits.
"""

from __future__ import annotations

import json
from fractions import Fraction

from germlab._core import (
    NotConvenientError,
    NotIsolatedError,
    ParseError,
    ResourceLimitError,
    SmoothGermError,
    __version__,
    analyze_json,
    milnor_number,
    newton_number as _newton_number,
    oracle_truncated_dim,
    tjurina_number,
)

__all__ = [
    "__version__",
    "analyze",
    "analyze_json",
    "milnor_number",
    "newton_number",
    "oracle_truncated_dim",
    "tjurina_number",
    "NotConvenientError",
    "NotIsolatedError",
    "ParseError",
    "ResourceLimitError",
    "SmoothGermError",
]


def analyze(
    poly: str,
    vars: list[str],
    checks: str = "algebra",
    seed: int = 0,
    samples: int = 3,
    coeff_bound: int = 20,
) -> dict:
    """Full invariant report as a dict (see ``analyze_json`` for the raw form).

    ``checks`` is a comma-separated subset of ``algebra``, ``newton``,
    ``sectional``, or ``all``.  Domain problems (smooth germ, non-isolated
    singularity, bad input) are reported in the ``status`` field rather than
    raised.
    """
    return json.loads(analyze_json(poly, vars, checks, seed, samples, coeff_bound))


def newton_number(poly: str, vars: list[str]) -> tuple[int, list[Fraction]]:
    """Newton number and under-diagram volumes ``V_1..V_n`` of a convenient germ."""
    nu, volumes = _newton_number(poly, vars)
    return nu, [Fraction(v) for v in volumes]
