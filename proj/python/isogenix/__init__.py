"""Normalized l-isogenies over prime fields."""

import json

from ._core import IsogenixError, algorithms, isogeny, selftest, wp
from ._core import generate as _generate
from ._core import verify as _verify

__all__ = ["IsogenixError", "algorithms", "generate", "isogeny", "selftest", "verify", "wp"]


def generate(p, ell, seed=1):
    """Random instance as a dict (decimal strings, ascending coefficients)."""
    return json.loads(_generate(p, ell, seed))


def verify(instance, samples=8):
    if not isinstance(instance, str):
        instance = json.dumps(instance)
    return _verify(instance, samples)
