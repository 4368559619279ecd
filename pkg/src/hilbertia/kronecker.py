"""Kronecker specialization and irreducible specialization of the first variable.

S_d sends X1 -> X and X_j -> Y**(d**(j-2)) for j >= 2.  On V_d (degree < d in
each of X2..Xk) it is a bijection onto W_d (Y-degree < d**(k-1)), inverted by
reading each Y-exponent in base d.  Because S_d is multiplicative, factoring
S_d(f) in Q[X][Y] lets us decide irreducibility of f and pick values b for
which f(b, X2, ..., Xk) stays irreducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from typing import Iterable, Iterator

from .errors import (BudgetExhaustedError, DegreeError, NotIrreducibleError,
                     VariableCountError, ZeroPolynomialError)
from .factor import (Verdict, factor_bipoly_small, factor_unipoly, is_irreducible_bi,
                     is_irreducible_uni)
from .orders import naturals
from .poly import BiPoly, MultiPoly, UniPoly, as_multi, as_rational, uni_gcd


@dataclass(frozen=True)
class KroneckerParams:
    d: int
    k: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"d must be at least 2, got {self.d}")
        if self.k < 3:
            raise ValueError(f"k must be at least 3, got {self.k}")

    @property
    def y_bound(self) -> int:
        """Members of W_d have Y-degree below this."""
        return self.d ** (self.k - 1)


def kronecker_forward(f: MultiPoly, params: KroneckerParams) -> BiPoly:
    if f.nvars != params.k:
        raise VariableCountError(f"expected {params.k} variables, got {f.nvars}")
    d = params.d
    terms: dict[tuple[int, int], Fraction] = {}
    for e, c in f.terms.items():
        y = sum(a * d ** i for i, a in enumerate(e[1:]))
        key = (e[0], y)
        terms[key] = terms.get(key, Fraction(0)) + c
    return BiPoly.from_dict(terms)


def in_Vd(f: MultiPoly, params: KroneckerParams) -> bool:
    return all(max(e[1:], default=0) < params.d for e in f.terms)


def in_Wd(g: BiPoly, params: KroneckerParams) -> bool:
    return g.deg_y < params.y_bound


def _digits(s: int, d: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        s, r = divmod(s, d)
        out.append(r)
    return tuple(out)


def kronecker_inverse(g: BiPoly, params: KroneckerParams) -> MultiPoly:
    """The unique f in V_d with S_d(f) = g."""
    if not in_Wd(g, params):
        raise DegreeError(f"Y-degree {g.deg_y} is not below d**(k-1) = {params.y_bound}")
    terms = {}
    for (i, j), c in g.terms().items():
        terms[(i,) + _digits(j, params.d, params.k - 1)] = c
    return MultiPoly(params.k, terms)


def default_d(f: MultiPoly) -> int:
    """Least d exceeding the degree of f in every variable."""
    return max(2, 1 + max(f.degrees(), default=0))


# ---------------------------------------------------------------------------
# irreducibility in several variables


def _as_bipoly(f: MultiPoly) -> BiPoly:
    if f.nvars != 2:
        raise VariableCountError("need exactly two variables")
    return BiPoly.from_multi(f)


def _divisor_multisets(parts: list) -> Iterator[tuple[int, ...]]:
    """Index subsets of a list, each distinct multiset once if parts repeat."""
    seen = set()
    for r in range(len(parts) + 1):
        for idx in combinations(range(len(parts)), r):
            key = tuple(sorted(map(repr, (parts[i] for i in idx))))
            if key not in seen:
                seen.add(key)
                yield idx


def _product(items: Iterable, one):
    out = one
    for x in items:
        out = out * x
    return out


def kronecker_split(f: MultiPoly, d: int | None = None) -> tuple[MultiPoly, MultiPoly] | None:
    """A factorization f = u*v with u, v nonconstant, or None if f is irreducible.

    Any factor u of f lies in V_d, so S_d(u) is a divisor of S_d(f): an
    X-only divisor times a sub-multiset of the irreducible factors.  Trying
    them all decides irreducibility.
    """
    k = f.nvars
    if k < 3:
        raise VariableCountError("the Kronecker map needs at least three variables")
    params = KroneckerParams(d or default_d(f), k)
    F = kronecker_forward(f, params)
    fac = factor_bipoly_small(F, None, None)
    x_parts = [g for g, m in factor_unipoly(fac.x_part).factors for _ in range(m)]
    y_parts = fac.irreducible_factors()
    one = BiPoly([UniPoly([1])])
    for xs in _divisor_multisets(x_parts):
        cx = BiPoly([_product((x_parts[i] for i in xs), UniPoly([1]))])
        for ys in _divisor_multisets(y_parts):
            if not xs and not ys:
                continue
            if len(xs) == len(x_parts) and len(ys) == len(y_parts):
                continue
            U = cx * _product((y_parts[i] for i in ys), one)
            V = F.div_exact(U)
            if V is None or not in_Wd(U, params) or not in_Wd(V, params):
                continue
            u, v = kronecker_inverse(U, params), kronecker_inverse(V, params)
            if u.is_constant() or v.is_constant():
                continue
            if u * v == f:
                return u, v
    return None


def is_irreducible_multi(f: MultiPoly) -> bool:
    """Irreducible in Q[X1..Xk] with positive degree in the last variable."""
    if f.is_zero():
        raise ZeroPolynomialError("irreducibility of the zero polynomial")
    if f.degree_in(f.nvars) < 1:
        return False
    if f.nvars == 1:
        return is_irreducible_uni(f.to_unipoly())
    if f.nvars == 2:
        return is_irreducible_bi(_as_bipoly(f), 50).verdict is Verdict.IRREDUCIBLE
    return kronecker_split(f) is None


# ---------------------------------------------------------------------------
# direct certificates: independent of the Kronecker pipeline


def _content_first_var(f: MultiPoly) -> UniPoly:
    """Monic gcd over Q[X1] of the coefficients of f viewed in Q[X1][X2..Xk]."""
    groups: dict[tuple, dict[int, Fraction]] = {}
    for e, c in f.terms.items():
        groups.setdefault(e[1:], {})[e[0]] = c
    g = UniPoly()
    for coeffs in groups.values():
        cs = [Fraction(0)] * (max(coeffs) + 1)
        for i, c in coeffs.items():
            cs[i] = c
        g = uni_gcd(g, UniPoly(cs))
        if g.degree == 0:
            break
    return g


def _rest_degree(f: MultiPoly) -> int:
    """Total degree in X2..Xk."""
    return max((sum(e[1:]) for e in f.terms), default=-1)


def certify_irreducible(f: MultiPoly, budget: int = 200) -> bool:
    """Sound certificate that f (k >= 2 variables) is irreducible.

    For k = 2 this is the bivariate witness certificate.  For k > 2: f has
    trivial content over Q[X1] and some b keeps the total degree in X2..Xk
    while f(b, X2, ..., Xk) is certified irreducible in turn.  A split f = uv
    would then specialize to a split with both parts nonconstant.  Returns
    False when no certificate is found, which does not prove reducibility.
    """
    if f.nvars < 2:
        raise VariableCountError("certificates need at least two variables")
    if f.nvars == 2:
        bf = _as_bipoly(f)
        if bf.deg_y < 1:
            return False
        return is_irreducible_bi(bf, budget).verdict is Verdict.IRREDUCIBLE
    if _rest_degree(f) < 1 or _content_first_var(f).degree > 0:
        return False
    top = _rest_degree(f)
    for b in islice(naturals(0), budget):
        fb = f.specialize(1, b)
        if _rest_degree(fb) == top and fb.degree_in(fb.nvars) >= 1 and certify_irreducible(fb, budget):
            return True
    return False


def certify_specialization(f: MultiPoly, b) -> bool:
    """Directly certify f(b, X2, ..., Xk) irreducible."""
    fb = f.specialize(1, as_rational(b))
    if fb.nvars == 1:
        return is_irreducible_uni(fb.to_unipoly()) if fb else False
    if fb.degree_in(fb.nvars) < 1:
        return False
    return certify_irreducible(fb)


# ---------------------------------------------------------------------------
# the pipeline


@dataclass
class PipelineDiagnostics:
    tested: int = 0
    x_part_vanishes: int = 0
    factor_splits: int = 0
    excluded_by_partition: int = 0
    certificate_failed: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class _Pipeline:
    """Precomputed S_d(f) factorization and the exceptional sets it implies."""

    def __init__(self, f: MultiPoly, d: int | None):
        self.f = f
        self.params = KroneckerParams(d or default_d(f), f.nvars)
        self.image = kronecker_forward(f, self.params)
        fac = factor_bipoly_small(self.image, None, None)
        self.x_part = fac.x_part
        self.parts = fac.irreducible_factors()
        self.partition_guards = self._partition_guards()

    def _partition_guards(self) -> list[list[UniPoly]]:
        """Per partition {A, B}: X1-coefficients of u~v~ outside V_d.

        A value b can hide a split of f_b behind that partition only if all of
        them vanish at b.
        """
        one = BiPoly([UniPoly([1])])
        n = len(self.parts)
        guards = []
        for r in range(1, n // 2 + 1):
            for A in combinations(range(n), r):
                B = [i for i in range(n) if i not in A]
                U = _product((self.parts[i] for i in A), one)
                V = _product((self.parts[i] for i in B), one)
                if not (in_Wd(U, self.params) and in_Wd(V, self.params)):
                    continue
                W = kronecker_inverse(U, self.params) * kronecker_inverse(V, self.params)
                coeffs: dict[tuple, dict[int, Fraction]] = {}
                for e, c in W.terms.items():
                    if max(e[1:]) >= self.params.d:
                        coeffs.setdefault(e[1:], {})[e[0]] = c
                polys = []
                for cs in coeffs.values():
                    dense = [Fraction(0)] * (max(cs) + 1)
                    for i, c in cs.items():
                        dense[i] = c
                    polys.append(UniPoly(dense))
                guards.append(polys)
        return guards

    def accepts(self, b: Fraction, diag: PipelineDiagnostics) -> bool:
        if self.x_part(b) == 0:
            diag.x_part_vanishes += 1
            return False
        for g in self.parts:
            if g.lc(b) == 0 or not is_irreducible_uni(g.specialize(b)):
                diag.factor_splits += 1
                return False
        for polys in self.partition_guards:
            if all(p(b) == 0 for p in polys):
                diag.excluded_by_partition += 1
                return False
        return True


def _check_input(f: MultiPoly) -> None:
    if f.nvars < 3:
        raise VariableCountError("the Kronecker pipeline needs at least three variables")
    if f.degree_in(f.nvars) < 1:
        raise NotIrreducibleError(f"{f} has degree 0 in X{f.nvars}")
    split = kronecker_split(f)
    if split is not None:
        raise NotIrreducibleError(f"input is reducible: {split[0]} divides {f}", witness=split)


def iter_first_var_irreducible(f: MultiPoly, budget: int, d: int | None = None,
                               candidates: Iterator[Fraction] | None = None,
                               diagnostics: PipelineDiagnostics | None = None,
                               check_input: bool = True) -> Iterator[Fraction]:
    """Lazily yield the values that specialize_first_var_irreducible would return."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    if check_input:
        _check_input(f)
    pipe = _Pipeline(f, d)
    diag = diagnostics if diagnostics is not None else PipelineDiagnostics()
    for b in islice(candidates if candidates is not None else naturals(0), budget):
        diag.tested += 1
        if not pipe.accepts(b, diag):
            continue
        if not certify_specialization(f, b):
            diag.certificate_failed += 1
            continue
        yield b


def specialize_first_var_irreducible(f: MultiPoly, budget: int = 100, d: int | None = None,
                                     candidates: Iterator[Fraction] | None = None) -> list[Fraction]:
    """Values b (among the first ``budget`` candidates) with f(b, X2, ..., Xk) irreducible.

    A value is emitted when the factorization of S_d(f) proves f_b irreducible
    (the X-only part does not vanish, every factor stays irreducible, and no
    partition of the factors can hide a split) and a direct certificate for
    f_b agrees.
    """
    diag = PipelineDiagnostics()
    out = list(iter_first_var_irreducible(f, budget, d, candidates, diag))
    if not out:
        raise BudgetExhaustedError(
            f"no value found among {diag.tested} candidates", diag.as_dict())
    return out


def full_specialization(f: MultiPoly, p: MultiPoly, budget: int = 100) -> tuple[Fraction, ...]:
    """(b1, ..., b_{k-1}) with p(b) != 0 and f(b, X_k) irreducible.

    Variables are fixed one at a time.  At each stage the remaining part of p
    must stay a nonzero polynomial, which excludes finitely many values.
    """
    from .hilbert import hilbert_stream, SearchStrategy

    f, p = as_multi(f), as_multi(p)
    k = f.nvars
    if k < 2:
        raise VariableCountError("need at least two variables")
    if p.nvars != k - 1:
        raise VariableCountError(f"p must have {k - 1} variables, got {p.nvars}")
    if p.is_zero():
        raise ZeroPolynomialError("p must be nonzero")
    chosen: list[Fraction] = []
    cur_f, cur_p = f, p
    while cur_f.nvars > 2:
        diag = PipelineDiagnostics()
        picked = None
        for b in iter_first_var_irreducible(cur_f, budget, diagnostics=diag,
                                            check_input=not chosen):
            if cur_p.specialize(1, b):
                picked = b
                break
        if picked is None:
            raise BudgetExhaustedError(
                f"stage {len(chosen) + 1}: no value found among {diag.tested} candidates",
                diag.as_dict())
        chosen.append(picked)
        cur_f, cur_p = cur_f.specialize(1, picked), cur_p.specialize(1, picked)
    # two variables left: plain Hilbert enumeration over the first one
    bf = _as_bipoly(cur_f)
    pu = cur_p.to_unipoly()
    picked = None
    for b in hilbert_stream(bf, SearchStrategy("naturals", budget)):
        if pu(b) != 0:
            picked = b
            break
    if picked is None:
        raise BudgetExhaustedError(f"stage {len(chosen) + 1}: no value found within budget {budget}")
    chosen.append(picked)
    result = tuple(chosen)
    if p.evaluate(result) == 0 or not is_irreducible_uni(_last_var(f, result)):
        raise AssertionError("final verification failed")
    return result


def _last_var(f: MultiPoly, point: tuple) -> UniPoly:
    g = f
    for b in point:
        g = g.specialize(1, b)
    return g.to_unipoly()
