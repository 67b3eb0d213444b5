import math
from collections import defaultdict

import numpy as np
import pytest

from fig8.figure_eight_core import in_xi_region

_CRITERIA = defaultdict(list)


def sample_xi(rng, count, a_max=2.5, require=None):
    """Uniform draws from Xi (a in (0, a_max), b in (0, pi/2), alpha > 1/2)."""
    out = []
    while len(out) < count:
        xi = complex(rng.uniform(1e-3, a_max), rng.uniform(1e-3, math.pi / 2 - 1e-3))
        if not in_xi_region(xi):
            continue
        if require is not None and not require(xi):
            continue
        out.append(xi)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def criterion():
    """Record one acceptance item: criterion(number, item, passed, detail)."""

    def record(number, item, passed, detail=""):
        _CRITERIA[number].append((item, bool(passed), detail))
        return bool(passed)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        items = _CRITERIA[number]
        ok = all(p for _, p, _ in items)
        tr.write_line(f"CRITERION {number:>2} {'PASS' if ok else 'FAIL'}")
        for item, passed, detail in items:
            tr.write_line(f"    [{'pass' if passed else 'FAIL'}] {item}: {detail}")
