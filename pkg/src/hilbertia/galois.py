"""Galois groups of irreducible rational polynomials of degree at most 4.

Degree 3 is decided by the discriminant.  Degree 4 uses the resolvent cubic
R(y) = y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2), whose roots are
a1a2 + a3a4 and its conjugates.  When R has exactly one rational root r the
group is C4 or D4, and it is C4 exactly when x^2 + a x + (b - r) and
x^2 - r x + d both split over Q(sqrt(disc)) (Kappe and Warren).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegreeError, NotIrreducibleError, NotSquarefreeError, ZeroPolynomialError
from .factor import is_irreducible_uni, rational_roots
from .poly import UniPoly, uni_gcd
from .resultant import discriminant


@dataclass(frozen=True)
class GroupLabel:
    name: str
    order: int

    def __str__(self) -> str:
        return self.name


C1 = GroupLabel("C1", 1)
C2 = GroupLabel("C2", 2)
C3 = GroupLabel("C3", 3)
S3 = GroupLabel("S3", 6)
C4 = GroupLabel("C4", 4)
V4 = GroupLabel("V4", 4)
D4 = GroupLabel("D4", 8)
A4 = GroupLabel("A4", 12)
S4 = GroupLabel("S4", 24)
LABELS = {g.name: g for g in (C1, C2, C3, S3, C4, V4, D4, A4, S4)}


def is_rational_square(q: Fraction) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d


def _is_squarefree(f: UniPoly) -> bool:
    return uni_gcd(f, f.derivative()).degree == 0


def _splits_over(a: Fraction, b: Fraction, disc: Fraction) -> bool:
    """x^2 + a x + b splits over Q(sqrt(disc))."""
    D = a * a - 4 * b
    return D == 0 or is_rational_square(D) or is_rational_square(D * disc)


def resolvent_cubic(f: UniPoly) -> UniPoly:
    """Resolvent cubic of a quartic (made monic first)."""
    if f.degree != 4:
        raise DegreeError("resolvent cubic needs a quartic")
    g = f.monic()
    d, c, b, a = g[0], g[1], g[2], g[3]
    return UniPoly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])


def galois_group_deg_le4(f: UniPoly) -> GroupLabel:
    if f.is_zero():
        raise ZeroPolynomialError("Galois group of the zero polynomial")
    n = f.degree
    if n < 1 or n > 4:
        raise DegreeError(f"degree must be 1..4, got {n}")
    if not _is_squarefree(f):
        raise NotSquarefreeError(f"{f} has a repeated root")
    if not is_irreducible_uni(f):
        raise NotIrreducibleError(f"{f} is reducible over Q")
    if n == 1:
        return C1
    if n == 2:
        return C2
    disc = discriminant(f)
    if n == 3:
        return C3 if is_rational_square(disc) else S3
    R = resolvent_cubic(f)
    roots = rational_roots(R)
    if not roots:
        return A4 if is_rational_square(disc) else S4
    if len(roots) == 3:
        return V4
    r = next(iter(roots))
    g = f.monic()
    a, b, d = g[3], g[2], g[0]
    if _splits_over(a, b - r, disc) and _splits_over(-r, d, disc):
        return C4
    return D4


def transitive_action_check(f: UniPoly) -> bool:
    """Whether the Galois group acts transitively on the roots, i.e. f is irreducible."""
    if f.is_zero() or f.degree < 1:
        raise DegreeError("need degree >= 1")
    if not _is_squarefree(f):
        raise NotSquarefreeError(f"{f} has a repeated root")
    return is_irreducible_uni(f)


def general_specialization(values: Sequence[int]) -> UniPoly:
    """Y^n - x1 Y^(n-1) + x2 Y^(n-2) - ... + (-1)^n xn at the given integers."""
    n = len(values)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    for i, x in enumerate(values, start=1):
        coeffs[n - i] = Fraction((-1) ** i * x)
    return UniPoly(coeffs)


def classify_or_discard(f: UniPoly) -> str:
    """Group name, or ``discarded`` for reducible or non-squarefree input."""
    if not _is_squarefree(f) or not is_irreducible_uni(f):
        return "discarded"
    return galois_group_deg_le4(f).name


def specialization_group_experiment(degree: int, sample_box: int, samples: int,
                                    seed: int = 0) -> dict[str, int]:
    """Frequency table of group labels over random integer specializations.

    The ``discarded`` entry counts reducible or non-squarefree samples.
    """
    if not 2 <= degree <= 4:
        raise DegreeError("degree must be 2, 3 or 4")
    if samples < 1:
        raise ValueError("samples must be positive")
    rng = random.Random(seed)
    table: dict[str, int] = {}
    for _ in range(samples):
        point = [rng.randint(-sample_box, sample_box) for _ in range(degree)]
        label = classify_or_discard(general_specialization(point))
        table[label] = table.get(label, 0) + 1
    return dict(sorted(table.items()))
