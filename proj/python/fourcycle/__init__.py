"""Multi-pass streaming four-cycle detection and counting."""

import json as _json

from ._core import SCHEMA_VERSION, InputError, exact_count, four_cycles, generate
from . import _core

__all__ = [
    "SCHEMA_VERSION",
    "InputError",
    "exact_count",
    "four_cycles",
    "generate",
    "detect",
    "count",
    "baseline",
]


def detect(edges, T=None, seed=1, runs=1, profile="desk", epsilon=0.5, delta=None, c=None):
    """Run detection; runs=0 uses the default amplification for the node count."""
    return _json.loads(_core.detect_json(edges, T, seed, runs, profile, epsilon, delta, c))


def count(edges, T=None, seed=1, oracle="reference", median_runs=1, profile="desk", epsilon=0.5, delta=None, c=None):
    return _json.loads(_core.count_json(edges, T, seed, oracle, median_runs, profile, epsilon, delta, c))


def baseline(edges, T=None, seed=1, c=1.0):
    return _json.loads(_core.baseline_json(edges, T, seed, c))
