"""Enumeration of Hilbert sets: values b for which f(b, Y) stays irreducible."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Iterator

from .errors import BudgetExhaustedError, NotIrreducibleError, NotRegularError
from .factor import Verdict, is_irreducible_bi, is_irreducible_uni
from .orders import integers_by_height, naturals, rationals_by_height, shifted_reciprocals
from .poly import BiPoly, UniPoly, as_rational
from .resultant import discriminant_y, is_regular_value

KINDS = ("naturals", "integers", "rationals", "shifted_reciprocal")


@dataclass(frozen=True)
class SearchStrategy:
    """Candidate order plus a budget counting candidates tested (not yields).

    kinds: ``naturals`` (start, start+1, ...), ``integers`` (0, 1, -1, 2, ...),
    ``rationals`` (by height), ``shifted_reciprocal`` (s0 + 1/t, t = 1, 2, ...).
    """

    kind: str = "naturals"
    budget: int = 1000
    s0: Fraction | None = None
    start: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown strategy {self.kind!r}; expected one of {KINDS}")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.kind == "shifted_reciprocal" and self.s0 is None:
            raise ValueError("shifted_reciprocal needs s0")

    def candidates(self) -> Iterator[Fraction]:
        if self.kind == "naturals":
            return naturals(self.start)
        if self.kind == "integers":
            return integers_by_height()
        if self.kind == "rationals":
            return rationals_by_height()
        return shifted_reciprocals(as_rational(self.s0))


def require_irreducible(f: BiPoly, budget: int = 100) -> None:
    cert = is_irreducible_bi(f, budget)
    if cert.verdict is not Verdict.IRREDUCIBLE:
        raise NotIrreducibleError(f"{f} is not irreducible ({cert.verdict.value})",
                                  witness=cert.reducible_witness)


class _Tester:
    """Regularity pre-check with one shared discriminant, then factorization."""

    def __init__(self, f: BiPoly):
        self.f = f
        self.disc = discriminant_y(f)

    def regular(self, b) -> bool:
        return self.f.lc(b) != 0 and self.disc(b) != 0

    def irreducible(self, b) -> bool:
        # a non-regular b gives a repeated root or a degree drop, never a yield
        return self.regular(b) and is_irreducible_uni(self.f.specialize(b))


def hilbert_stream(f: BiPoly, strategy: SearchStrategy | None = None) -> Iterator[Fraction]:
    """Lazily yield b in strategy order with f(b, Y) irreducible of full Y-degree.

    The precondition is checked here, before the first value is requested.
    The stream stops when the budget of tested candidates is spent; spending
    it without a single yield raises BudgetExhaustedError.
    """
    strategy = strategy or SearchStrategy()
    require_irreducible(f)
    tester = _Tester(f)
    if strategy.kind == "shifted_reciprocal" and not tester.regular(strategy.s0):
        raise NotRegularError(f"s0 = {strategy.s0} is not a regular value")
    return _stream(tester, strategy)


def _stream(tester: _Tester, strategy: SearchStrategy) -> Iterator[Fraction]:
    yielded = 0
    for b in islice(strategy.candidates(), strategy.budget):
        if tester.irreducible(b):
            yielded += 1
            yield b
    if not yielded:
        raise BudgetExhaustedError(
            f"no irreducible specialization among {strategy.budget} candidates",
            {"tested": strategy.budget})


@dataclass
class HilbertStats:
    tested: int = 0
    irreducible_count: int = 0
    nonregular_count: int = 0
    examples: list[Fraction] = field(default_factory=list)
    max_examples: int = 10


def hilbert_count(f: BiPoly, lo: int, hi: int, max_examples: int = 10) -> HilbertStats:
    """Exact counts over the integers lo..hi inclusive."""
    require_irreducible(f)
    tester = _Tester(f)
    stats = HilbertStats(max_examples=max_examples)
    for n in range(lo, hi + 1):
        b = Fraction(n)
        stats.tested += 1
        if not tester.regular(b):
            stats.nonregular_count += 1
            continue
        if is_irreducible_uni(f.specialize(b)):
            stats.irreducible_count += 1
            if len(stats.examples) < max_examples:
                stats.examples.append(b)
    return stats


def t_search(f: BiPoly, s0, t_max: int) -> list[tuple[int, Fraction, bool]]:
    """(t, s0 + 1/t, irreducible?) for t = 1..t_max."""
    s0 = as_rational(s0)
    if not is_regular_value(f, s0).is_regular:
        raise NotRegularError(f"s0 = {s0} is not a regular value")
    tester = _Tester(f)
    out = []
    for t in range(1, t_max + 1):
        b = s0 + Fraction(1, t)
        out.append((t, b, tester.irreducible(b)))
    return out
