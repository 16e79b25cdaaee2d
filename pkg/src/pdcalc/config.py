"""Run-wide limits (enumeration budget, default bounds)."""

import os
from contextlib import contextmanager

DEFAULT_BOUND = 3
DEFAULT_NMAX = 3
DEFAULT_WORD_BOUND = 8
DEFAULT_BUDGET = 10**7
MIN_BUDGET = 10**3

_budget = None


def get_budget():
    if _budget is not None:
        return _budget
    env = os.environ.get("PDCALC_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@contextmanager
def budget(n):
    """Temporarily cap every single enumeration at ``n`` candidate steps."""
    global _budget
    old = _budget
    _budget = int(n)
    try:
        yield
    finally:
        _budget = old
