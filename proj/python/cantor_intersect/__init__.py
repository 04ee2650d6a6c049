"""Intersections of deleted-digits Cantor sets with their translates."""

import json

from ._core import (
    CantorError,
    classify,
    mu,
    oracle_counts,
    run_cli,
    sigma,
    to_fraction,
)
from ._core import bounds_json as _bounds_json

__all__ = [
    "CantorError",
    "bounds",
    "classify",
    "mu",
    "oracle_counts",
    "run_cli",
    "sigma",
    "to_fraction",
]


def bounds(n, digits, t, K=64, precision=30):
    """Measure report for C ∩ (C + t) as a dict in the CLI JSON layout."""
    return json.loads(_bounds_json(n, list(digits), t, K, precision))
