"""Power series of algebraic roots, their majorant, and divided differences.

Near a regular point (b, y0) of f, the root through y0 is an analytic
function y0 + u(z) of z = X - b.  Writing the shifted polynomial as
``sum a_ij z**i u**j`` with a_00 = 0 and a_01 != 0, the coefficients of
u(z) = sum b_k z**k follow from b_k = -c_k / a_01, where c_k is the z**k
coefficient of f(z, b_1 z + ... + b_{k-1} z**(k-1)).

The same recursion applied to h(z, v) = A z - v + A * sum_{i+j>=2} z**i v**j
gives the majorant series, with A_k >= |b_k| whenever A bounds every
normalized coefficient a'_ij = -a_ij / a_01.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .errors import AlgebraError, NotRegularError
from .poly import BiPoly, UniPoly, as_rational
from .resultant import bareiss_det

Scalar = Union[Fraction, complex]

ROOT_TOL = 1e-9
DOMINANCE_RTOL = 1e-9


@dataclass(frozen=True)
class TruncSeries:
    """coeffs[k] is the z**k coefficient, k = 0..order."""

    coeffs: tuple
    order: int
    exact: bool = True

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def _scalar(x, exact: bool):
    return as_rational(x) if exact else complex(x)


def _shifted_terms(f: BiPoly, b, y0) -> dict[tuple[int, int], Scalar]:
    """Coefficients a_ij of f(b + z, y0 + u)."""
    out: dict[tuple[int, int], Scalar] = {}
    for (p, q), c in f.terms().items():
        for i in range(p + 1):
            cx = c * comb(p, i) * b ** (p - i)
            if not cx:
                continue
            for j in range(q + 1):
                v = cx * comb(q, j) * y0 ** (q - j)
                out[(i, j)] = out.get((i, j), 0) + v
    return out


@dataclass(frozen=True)
class LocalForm:
    """f(b + z, y0 + u) = -a01 * (a'_10 z - u + sum a'_ij z**i u**j)."""

    a01: Scalar
    normalized_coeffs: dict = field(hash=False)
    A: int
    shifted: dict = field(hash=False, repr=False)
    exact: bool = True


def local_form(f: BiPoly, b, y0) -> LocalForm:
    exact = _is_exact(y0) and _is_exact(b)
    b, y0 = _scalar(b, exact), _scalar(y0, exact)
    terms = _shifted_terms(f, b, y0)
    a00 = terms.get((0, 0), 0)
    if exact and a00 != 0:
        raise AlgebraError(f"y0 = {y0} is not a root of f({b}, Y)")
    if not exact and abs(a00) >= ROOT_TOL:
        raise AlgebraError(f"|f(b, y0)| = {abs(a00):.3g} exceeds tolerance {ROOT_TOL}")
    a01 = terms.get((0, 1), 0)
    if (exact and a01 == 0) or (not exact and abs(a01) < ROOT_TOL):
        raise NotRegularError(f"df/dY vanishes at ({b}, {y0})")
    norm = {ij: -c / a01 for ij, c in terms.items() if ij not in ((0, 0), (0, 1)) and c != 0}
    top = max((abs(c) for c in norm.values()), default=0)
    A = max(1, math.ceil(top))
    shifted = {ij: c for ij, c in terms.items() if c != 0 and ij != (0, 0)}
    return LocalForm(a01, norm, A, shifted, exact)


def _mul_trunc(a: list, b: list, n: int) -> list:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
    return out


def _compose_coeff(terms: dict, u: list, k: int):
    """z**k coefficient of sum c_ij z**i u(z)**j, u(0) = 0."""
    n = k + 1
    max_j = max((j for _, j in terms), default=0)
    powers = [[1] + [0] * k]
    for _ in range(max_j):
        powers.append(_mul_trunc(powers[-1], u, n))
    total = 0
    for (i, j), c in terms.items():
        if i <= k:
            total += c * powers[j][k - i]
    return total


def root_series(f: BiPoly, b, y0, K: int) -> TruncSeries:
    """u(z) with f(b + z, y0 + u(z)) = O(z**(K+1)), u(0) = 0."""
    if K < 1:
        raise ValueError("K must be at least 1")
    lf = local_form(f, b, y0)
    u = [0] * (K + 1)
    for k in range(1, K + 1):
        c_k = _compose_coeff(lf.shifted, u, k)
        u[k] = -c_k / lf.a01
    zero = Fraction(0) if lf.exact else 0j
    coeffs = tuple(zero + c for c in u)
    return TruncSeries(coeffs, K, lf.exact)


def residual_valuation(f: BiPoly, b, y0, series: TruncSeries) -> int:
    """z-adic valuation of f(b + z, y0 + u(z)), computed through order 2K+1.

    Returns a value above K when the series is correct to order K; exact mode.
    """
    terms = _shifted_terms(f, as_rational(b), as_rational(y0))
    n = 2 * series.order + 2
    u = list(series.coeffs)
    for k in range(n):
        if _compose_coeff(terms, u, k) != 0:
            return k
    return n


def majorant_series(A: int, K: int) -> TruncSeries:
    """Coefficients of the v(0) = 0 root of h(z, v) = A z - v + A * sum_{i+j>=2} z**i v**j."""
    if A < 0:
        raise ValueError("A must be nonnegative")
    if K < 1:
        raise ValueError("K must be at least 1")
    v = [0] * (K + 1)
    for k in range(1, K + 1):
        n = k + 1
        # c_k of h at the partial sum; h has a_01 = -1, so A_k = c_k
        c = A if k == 1 else 0
        power = [1] + [0] * k
        for j in range(0, k + 1):
            # z**i v**j with i >= max(0, 2 - j) and i <= k
            c += A * sum(power[k - i] for i in range(max(0, 2 - j), k + 1))
            power = _mul_trunc(power, v, n)
        v[k] = c
    return TruncSeries(tuple(Fraction(x) for x in v), K, True)


def majorant_residual(A: int, series: TruncSeries) -> list[Fraction]:
    """Coefficients 0..K of (A+1) v**2 - v + A z / (1 - z)."""
    n = series.order + 1
    v = list(series.coeffs)
    sq = _mul_trunc(v, v, n)
    return [(A + 1) * sq[k] - v[k] + (A if k >= 1 else 0) for k in range(n)]


def majorant_dominates(f: BiPoly, b, y0, K: int) -> bool:
    """|b_k| <= A_k for 1 <= k <= K (numeric mode with relative tolerance)."""
    lf = local_form(f, b, y0)
    us = root_series(f, b, y0, K)
    maj = majorant_series(lf.A, K)
    for k in range(1, K + 1):
        if lf.exact:
            if abs(us[k]) > maj[k]:
                return False
        elif abs(us[k]) > float(maj[k]) * (1 + DOMINANCE_RTOL):
            return False
    return True


# ---------------------------------------------------------------------------
# divided differences and interpolation


def _check_nodes(nodes: Sequence) -> list[Fraction]:
    ts = [as_rational(t) for t in nodes]
    if len(set(ts)) != len(ts):
        raise AlgebraError("nodes must be distinct")
    return ts


def divided_difference_ratio(nodes: Sequence, values: Sequence) -> Fraction:
    """W_m / V_m: Vandermonde determinant with its last column replaced by the values.

    Equals the leading coefficient of the degree-m interpolant.
    """
    ts = _check_nodes(nodes)
    ys = [as_rational(v) for v in values]
    m = len(ts) - 1
    if m < 1:
        raise ValueError("need at least two nodes")
    if len(ys) != len(ts):
        raise ValueError("need one value per node")
    vander = [[t ** e for e in range(m + 1)] for t in ts]
    w = [row[:m] + [y] for row, y in zip(vander, ys)]
    return bareiss_det(w) / bareiss_det(vander)


def interpolate_rational(nodes: Sequence, values: Sequence) -> UniPoly:
    """The unique polynomial of degree <= m through (t_i, v_i), via Newton's form."""
    ts = _check_nodes(nodes)
    ys = [as_rational(v) for v in values]
    if len(ys) != len(ts) or not ts:
        raise ValueError("need one value per node, at least one node")
    coef = list(ys)
    n = len(ts)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (ts[i] - ts[i - level])
    out = UniPoly.constant(coef[-1])
    for i in range(n - 2, -1, -1):
        out = out * UniPoly([-ts[i], 1]) + coef[i]
    return out
