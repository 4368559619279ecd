from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hilbertia.poly import BiPoly, MultiPoly, UniPoly  # noqa: E402

small_ints = st.integers(-5, 5)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def unipolys(max_deg: int = 4, coeffs=rationals, min_deg: int = 0):
    return st.lists(coeffs, min_size=min_deg + 1, max_size=max_deg + 1).map(UniPoly)


def bipolys(max_deg_y: int = 3, max_deg_x: int = 3, coeffs=small_ints):
    return st.lists(unipolys(max_deg_x, coeffs), min_size=1, max_size=max_deg_y + 1).map(BiPoly)


def multipolys(nvars: int, max_exp: int = 2, max_terms: int = 5, coeffs=rationals):
    exps = st.tuples(*[st.integers(0, max_exp)] * nvars)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda t: MultiPoly(nvars, t))


# acceptance lines collected by test_acceptance and printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
