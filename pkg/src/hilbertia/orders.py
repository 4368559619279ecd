"""Canonical enumeration orders for candidate specialization values."""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import count
from typing import Iterator


def naturals(start: int = 0) -> Iterator[Fraction]:
    """start, start+1, start+2, ..."""
    for n in count(start):
        yield Fraction(n)


def integers_by_height() -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    for n in count(1):
        yield Fraction(n)
        yield Fraction(-n)


def rationals_by_height() -> Iterator[Fraction]:
    """Reduced p/q (q >= 1) ordered by max(|p|, q), then by (p, q)."""
    for h in count(1):
        band = []
        for q in range(1, h + 1):
            for p in (-h, h) if q < h else range(-h, h + 1):
                if math.gcd(p, q) == 1:
                    band.append((p, q))
        for p, q in sorted(band):
            yield Fraction(p, q)


def shifted_reciprocals(s0: Fraction) -> Iterator[Fraction]:
    """s0 + 1/t for t = 1, 2, 3, ..."""
    for t in count(1):
        yield s0 + Fraction(1, t)
