"""Exact finite data of orbifold maps on global-quotient charts.

Inputs and outputs use the same JSON formats as the ``orbimap`` CLI. The
helpers here accept dicts and return parsed reports.
"""

import json

from . import _orbimap
from .errors import OrbimapError

__all__ = [
    "OrbimapError",
    "complete_lifts",
    "example_names",
    "group",
    "homomorphisms",
    "identity_lifts",
    "pullbacks",
    "run",
    "strata",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def group(chart):
    return json.loads(_orbimap.group(_text(chart)))


def homomorphisms(src, dst):
    """Image index lists, one per homomorphism."""
    return _orbimap.homomorphisms(_text(src), _text(dst))


def complete_lifts(orbifold_map):
    return json.loads(_orbimap.complete_lifts(_text(orbifold_map)))


def pullbacks(orbifold_map):
    return json.loads(_orbimap.pullbacks(_text(orbifold_map)))


def strata(orbifold_map, degree=3, format="json", seed=0):
    out = _orbimap.strata(_text(orbifold_map), degree, format, seed)
    return json.loads(out) if format == "json" else out


def identity_lifts(chart):
    return json.loads(_orbimap.identity_lifts(_text(chart)))


def example_names():
    return list(_orbimap.example_names())


def run(args):
    """Runs the CLI in-process; returns (exit_code, stdout, stderr)."""
    return _orbimap.run([str(a) for a in args])
