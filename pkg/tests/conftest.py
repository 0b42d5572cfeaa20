"""Shared fixtures.

The numba kernel pays a one-time JIT cost on first use.  Warm it up once
per session so individual tests (some of which assert wall-clock budgets)
measure steady-state behaviour.
"""

import pytest

from antiramsey import exact_ar, parse_pattern


@pytest.fixture(scope="session", autouse=True)
def _warm_kernel():
    exact_ar(4, parse_pattern("P4"), engine="numba")
