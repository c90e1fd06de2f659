"""Polynomial decomposition, Ritt collisions and tube densities.

Polynomials are passed as descending comma-separated coefficient text,
for example ``"1,4,5,2,0"`` for x^4 + 4x^3 + 5x^2 + 2x.
"""

import json

from ._core import (
    DomainError,
    ParameterError,
    ParseError,
    bounds_complex,
    bounds_complex_union,
    bounds_real,
    bounds_real_union,
    cheng_bound,
    compose,
    decompose,
    divisor_plan,
    estimate_density,
    lens_area,
    nt_set,
)
from ._core import collide_json as _collide_json
from ._core import dickson as _dickson
from ._core import section as _section

__all__ = [
    "DomainError",
    "ParameterError",
    "ParseError",
    "bounds_complex",
    "bounds_complex_union",
    "bounds_real",
    "bounds_real_union",
    "cheng_bound",
    "collide",
    "compose",
    "decompose",
    "dickson",
    "divisor_plan",
    "estimate_density",
    "lens_area",
    "nt_set",
    "section",
]


def section(coords, n, d, field="rational"):
    """Point of C_{n,d} with the given coordinates; numbers, Fractions or strings."""
    return _section([str(c) for c in coords], n, d, field)


def dickson(k, z, field="rational"):
    """Dickson polynomial T_k(x, z) as coefficient text."""
    return _dickson(k, str(z), field)


def collide(params, field="rational"):
    """Build a collision from a parameter dict (or JSON text) and verify it."""
    if not isinstance(params, str):
        params = json.dumps(params)
    return _collide_json(params, field)
