"""Exact homological algebra over filtered vector spaces.

Inputs are JSON-compatible dicts in the same format as the command line tool;
rationals are strings "p/q".
"""

import json

from . import _core
from ._core import VerificationError

__all__ = [
    "VerificationError",
    "cohomology",
    "classify_map",
    "check_lift",
    "pbw",
    "lie_check",
    "crit",
    "koszul",
    "run_suite",
]


def _call(fn, *args):
    return json.loads(fn(*args))


def _dump(x):
    return x if isinstance(x, str) else json.dumps(x)


def cohomology(complex_):
    return _call(_core.cohomology, _dump(complex_))


def classify_map(chain_map):
    return _call(_core.classify_map, _dump(chain_map))


def check_lift(square):
    return _call(_core.check_lift, _dump(square))


def pbw(lie, bound=6):
    return _call(_core.pbw, _dump(lie), bound)


def lie_check(lie):
    return _call(_core.lie_check, _dump(lie))


def crit(polynomial, bound=6):
    return _call(_core.crit, json.dumps(polynomial), bound)


def koszul(p, bound=6):
    return _call(_core.koszul, _dump(p), bound)


def run_suite(criterion, seed=1, fixtures_dir=""):
    return _call(_core.run_suite, criterion, seed, fixtures_dir)
