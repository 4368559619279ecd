"""Factorization over Q and irreducibility certificates in Q[X][Y].

Univariate polynomials are factored by squarefree decomposition followed by
the Zassenhaus routine in :mod:`hilbertia._zpoly`.  Bivariate polynomials are
factored by X-adic Hensel lifting: move a good point to X = 0, factor the
specialization there, lift the factors in Q[[X]] far enough to recover any
true factor, then recombine subsets and test by exact division.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, islice
from typing import Iterable, Iterator

from . import _zpoly
from .errors import DegreeBoundError, ZeroPolynomialError
from .orders import naturals
from .poly import (BiPoly, UniPoly, _factor_int, bi_squarefree_part, content_y,
                   primitive_part_y, uni_gcd)

_ONE = UniPoly([1])


# ---------------------------------------------------------------------------
# univariate


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in _factor_int(abs(n)).items():
        out = [d * p ** i for d in out for i in range(e + 1)]
    return sorted(out)


# beyond this trial-division of the end coefficients is slower than factoring
_DIVISOR_LIMIT = 10 ** 12


def rational_roots(f: UniPoly) -> set[Fraction]:
    """All rational roots of f, by testing p/q with p | a_0 and q | a_n."""
    if f.is_zero():
        raise ZeroPolynomialError("roots of the zero polynomial")
    if f.degree < 1:
        return set()
    _, a = f.integer_primitive()
    roots: set[Fraction] = set()
    if a[0] == 0:
        roots.add(Fraction(0))
        while a[0] == 0:
            a = a[1:]
    n = len(a) - 1
    if n == 0:
        return roots
    if abs(a[0]) > _DIVISOR_LIMIT or abs(a[-1]) > _DIVISOR_LIMIT:
        for g, _m in factor_unipoly(UniPoly.from_ints(a)).factors:
            if g.degree == 1:
                roots.add(-g[0])
        return roots
    for q in _divisors(a[-1]):
        for p in _divisors(a[0]):
            if math.gcd(p, q) != 1:
                continue
            for num in (p, -p):
                # q**n * f(num/q), kept in Z
                if sum(c * num ** i * q ** (n - i) for i, c in enumerate(a)) == 0:
                    roots.add(Fraction(num, q))
    return roots


def _uni_key(p: UniPoly) -> tuple:
    return (p.degree, tuple(p.coeffs))


@dataclass(frozen=True)
class Factorization:
    """unit * prod(g**m for g, m in factors), each g monic irreducible over Q."""

    unit: Fraction
    factors: tuple[tuple[UniPoly, int], ...] = ()

    def expand(self) -> UniPoly:
        out = UniPoly.constant(self.unit)
        for g, m in self.factors:
            out = out * g ** m
        return out

    def __str__(self) -> str:
        from .text import format_factor

        if not self.factors:
            return str(self.unit)
        body = "".join(format_factor(g) + (f"^{m}" if m > 1 else "") for g, m in self.factors)
        if self.unit == 1:
            return body
        if self.unit == -1:
            return "-" + body
        return f"{self.unit}*{body}"


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime s_i with f ~ prod s_i**i."""
    if f.is_zero():
        raise ZeroPolynomialError("squarefree decomposition of zero")
    f = f.monic()
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    a = uni_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = uni_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def factor_unipoly(f: UniPoly) -> Factorization:
    """Complete factorization over Q, factors ordered by degree then coefficients."""
    if f.is_zero():
        raise ZeroPolynomialError("factorization of the zero polynomial")
    factors: list[tuple[UniPoly, int]] = []
    for s, mult in squarefree_decomposition(f):
        _, ints = s.integer_primitive()
        for g in _zpoly.factor_squarefree(ints):
            factors.append((UniPoly.from_ints(g).monic(), mult))
    factors.sort(key=lambda t: _uni_key(t[0]))
    return Factorization(f.lc, tuple(factors))


def is_irreducible_uni(f: UniPoly) -> bool:
    if f.is_zero():
        raise ZeroPolynomialError("irreducibility of the zero polynomial")
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    fac = factor_unipoly(f).factors
    return len(fac) == 1 and fac[0][1] == 1


# ---------------------------------------------------------------------------
# bivariate factorization


def _bi_key(g: BiPoly) -> tuple:
    return (g.deg_y, g.deg_x, tuple(sorted(g.terms().items(), reverse=True)))


@dataclass(frozen=True)
class BiFactorization:
    """f = x_part(X) * prod(g**m), each g irreducible of positive Y-degree.

    Every g is scaled so that the leading coefficient of its leading Y
    coefficient is 1; all constants and X-only factors live in ``x_part``.
    """

    x_part: UniPoly
    factors: tuple[tuple[BiPoly, int], ...] = ()

    def expand(self) -> BiPoly:
        out = BiPoly([self.x_part])
        for g, m in self.factors:
            out = out * g ** m
        return out

    def irreducible_factors(self) -> list[BiPoly]:
        """Factors of positive Y-degree listed with multiplicity."""
        return [g for g, m in self.factors for _ in range(m)]


def _uni_exgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """(g, s, t) with s*a + t*b = g monic, over Q."""
    r0, r1, s0, s1, t0, t1 = a, b, _ONE, UniPoly(), UniPoly(), _ONE
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


class _XSeries:
    """Bivariate series truncated in X: rows[k] is the X**k coefficient, a UniPoly in Y."""

    @staticmethod
    def from_bipoly(f: BiPoly, prec: int) -> list[UniPoly]:
        rows: list[list[Fraction]] = [[Fraction(0)] * (f.deg_y + 1) for _ in range(prec)]
        for (i, j), c in f.terms().items():
            if i < prec:
                rows[i][j] = c
        return [UniPoly(r) for r in rows]

    @staticmethod
    def mul(a: list[UniPoly], b: list[UniPoly], prec: int) -> list[UniPoly]:
        out = [UniPoly() for _ in range(prec)]
        for i, ai in enumerate(a[:prec]):
            if ai.is_zero():
                continue
            for j in range(min(len(b), prec - i)):
                if not b[j].is_zero():
                    out[i + j] = out[i + j] + ai * b[j]
        return out

    @staticmethod
    def to_bipoly(rows: list[UniPoly]) -> BiPoly:
        terms = {}
        for k, row in enumerate(rows):
            for j, c in enumerate(row.coeffs):
                if c:
                    terms[(k, j)] = c
        return BiPoly.from_dict(terms)


def _series_inverse(a: UniPoly, prec: int) -> list[Fraction]:
    """Coefficients of 1/a(X) mod X**prec; requires a(0) != 0."""
    inv = [Fraction(0)] * prec
    a0 = a[0]
    inv[0] = 1 / a0
    for k in range(1, prec):
        s = sum(a[i] * inv[k - i] for i in range(1, min(k, a.degree) + 1))
        inv[k] = -s / a0
    return inv


def _hensel_lift_x(f_rows: list[UniPoly], factors: list[UniPoly], prec: int) -> list[list[UniPoly]]:
    """Lift f = prod(factors) at X = 0 (all monic in Y, coprime) to X**prec, linearly."""
    r = len(factors)
    # s_i * prod_{j != i} h_j = 1 mod h_i: partial-fraction cofactors
    cof = []
    for i, h in enumerate(factors):
        other = _ONE
        for j, g in enumerate(factors):
            if j != i:
                other = other * g
        _, s, _ = _uni_exgcd(other % h, h)
        cof.append(s)
    lifted = [[h] + [UniPoly() for _ in range(prec - 1)] for h in factors]
    for k in range(1, prec):
        prod = lifted[0]
        for i in range(1, r):
            prod = _XSeries.mul(prod, lifted[i], k + 1)
        err = f_rows[k] - prod[k]
        if err.is_zero():
            continue
        for i, h in enumerate(factors):
            lifted[i][k] = (err * cof[i]) % h
    return lifted


def _good_point(f: BiPoly) -> Fraction:
    """First b in 0, 1, 2, ... with lc(b) != 0 and f_b squarefree of full degree."""
    for b in naturals(0):
        if f.lc(b) == 0:
            continue
        fb = f.specialize(b)
        if uni_gcd(fb, fb.derivative()).degree == 0:
            return b
    raise AssertionError("unreachable")


def _factor_primitive_squarefree(f: BiPoly) -> list[BiPoly]:
    """Irreducible factors of a primitive f squarefree in Y, deg_Y f >= 1."""
    if f.deg_y <= 1:
        return [f.normalized()[1]]
    b0 = _good_point(f)
    g = f.shift_x(b0)
    modular = [h for h, _ in factor_unipoly(g.specialize(0)).factors]
    if len(modular) == 1:
        return [f.normalized()[1]]
    # lc(g) * H_S has X-degree at most deg_X(g) + deg_X(lc g) for any true factor
    prec = g.deg_x + g.lc.degree + 1
    inv = UniPoly(_series_inverse(g.lc, prec))
    monic_rows = _XSeries.from_bipoly(g * inv, prec)
    lifted = _hensel_lift_x(monic_rows, modular, prec)

    found: list[BiPoly] = []
    remaining = list(range(len(lifted)))
    rest = g
    s = 1
    while 2 * s <= len(remaining):
        for subset in combinations(remaining, s):
            lc_rows = _XSeries.from_bipoly(BiPoly([rest.lc]), prec)
            cand = lc_rows
            for i in subset:
                cand = _XSeries.mul(cand, lifted[i], prec)
            cand_bi = _XSeries.to_bipoly(cand)
            if cand_bi.is_zero() or cand_bi.deg_y < 1:
                continue
            cand_bi = primitive_part_y(cand_bi)
            quo = rest.div_exact(cand_bi)
            if quo is not None:
                found.append(cand_bi)
                rest = quo
                remaining = [i for i in remaining if i not in subset]
                break
        else:
            s += 1
    found.append(rest)
    return [h.shift_x(-b0).normalized()[1] for h in found]


def factor_bipoly_small(f: BiPoly, max_deg_y: int | None = 6,
                        max_deg_x: int | None = 12) -> BiFactorization:
    """Factor f in Q[X][Y] into an X-only part and irreducible factors.

    The default bounds keep instances at desk scale; pass None to lift them.
    """
    if f.is_zero():
        raise ZeroPolynomialError("factorization of the zero polynomial")
    if max_deg_y is not None and f.deg_y > max_deg_y:
        raise DegreeBoundError(f"Y-degree {f.deg_y} exceeds bound {max_deg_y}")
    if max_deg_x is not None and f.deg_x > max_deg_x:
        raise DegreeBoundError(f"X-degree {f.deg_x} exceeds bound {max_deg_x}")
    prim = primitive_part_y(f)
    factors: dict[BiPoly, int] = {}
    rest = prim
    # peel repeated factors: the squarefree part holds every irreducible once
    while rest.deg_y >= 1:
        sqf = bi_squarefree_part(rest)
        for g in _factor_primitive_squarefree(sqf):
            factors[g] = factors.get(g, 0) + 1
        quo = rest.div_exact(sqf)
        assert quo is not None
        rest = quo
    ordered = tuple(sorted(factors.items(), key=lambda t: _bi_key(t[0])))
    prod = BiPoly([_ONE])
    for g, m in ordered:
        prod = prod * g ** m
    x_part = f.div_exact(prod)
    assert x_part is not None and x_part.deg_y <= 0
    return BiFactorization(x_part.y_coeffs[0], ordered)


# ---------------------------------------------------------------------------
# bivariate irreducibility certificates


class Verdict(enum.Enum):
    IRREDUCIBLE = "Irreducible"
    REDUCIBLE = "Reducible"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class BiIrredCertificate:
    verdict: Verdict
    witness_b: Fraction | None = None
    content_ok: bool = False
    reducible_witness: tuple[BiPoly, BiPoly] | None = None
    tested: int = field(default=0, compare=False)

    @property
    def irreducible(self) -> bool:
        return self.verdict is Verdict.IRREDUCIBLE


def witness_ok(f: BiPoly, b) -> bool:
    """f_b irreducible with full Y-degree: certifies f irreducible if f is primitive."""
    if f.lc(b) == 0:
        return False
    return is_irreducible_uni(f.specialize(b))


def _search_witness(f: BiPoly, candidates: Iterable[Fraction], budget: int) -> tuple[Fraction | None, int]:
    tested = 0
    for b in islice(candidates, budget):
        tested += 1
        if witness_ok(f, b):
            return b, tested
    return None, tested


# after the factorizer has confirmed irreducibility, witnesses are plentiful;
# this cap only guards against a bug
_EXTENDED_SEARCH = 100_000


def is_irreducible_bi(f: BiPoly, search_budget: int = 100,
                      candidates: Iterator[Fraction] | None = None) -> BiIrredCertificate:
    """Certify irreducibility of f in Q[X][Y].

    A witness b (f_b irreducible of full Y-degree) proves irreducibility of a
    primitive f, since any split with positive Y-degrees would specialize to a
    split of f_b.  Candidates default to 0, 1, 2, ...
    """
    if search_budget <= 0:
        raise ValueError("search budget must be positive")
    if f.is_zero():
        raise ZeroPolynomialError("irreducibility of the zero polynomial")
    if f.deg_y < 1:
        return BiIrredCertificate(Verdict.NOT_APPLICABLE)
    c = content_y(f)
    if c.degree > 0:
        return BiIrredCertificate(Verdict.REDUCIBLE, content_ok=False,
                                  reducible_witness=(BiPoly([c]), primitive_part_y(f)))
    source = candidates if candidates is not None else naturals(0)
    b, tested = _search_witness(f, source, search_budget)
    if b is not None:
        return BiIrredCertificate(Verdict.IRREDUCIBLE, b, True, tested=tested)
    fac = factor_bipoly_small(f, None, None)
    parts = fac.irreducible_factors()
    if len(parts) > 1:
        first = parts[0]
        other = f.div_exact(first)
        return BiIrredCertificate(Verdict.REDUCIBLE, content_ok=True,
                                  reducible_witness=(first, other), tested=tested)
    # the factorizer says irreducible: keep looking past the budget for a witness
    b, more = _search_witness(f, naturals(0), _EXTENDED_SEARCH)
    if b is None:
        raise AssertionError(f"no witness found for irreducible {f}")
    return BiIrredCertificate(Verdict.IRREDUCIBLE, b, True, tested=tested + more)
