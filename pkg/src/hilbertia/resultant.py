"""Resultants, discriminants and regular values.

The resultant is the determinant of the Sylvester matrix, evaluated with
fraction-free (Bareiss) elimination.  For coefficients in Q[X] the matrix is
evaluated at enough integer points X = 0, 1, 2, ... and the determinant is
recovered by interpolation; this is exact and much faster than running the
elimination over Q[X] directly (``bareiss_det`` still accepts polynomial
entries).  The discriminant convention is

    disc(f) = (-1)**(n(n-1)/2) * res_Y(f, df/dY) / a_n,

so disc(Y**2 + b*Y + c) = b**2 - 4c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import AlgebraError, DegreeError, ZeroPolynomialError
from .poly import BiPoly, UniPoly, as_rational


def _exact_div(a, b):
    if isinstance(a, UniPoly):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        return a // b
    return a / b


def bareiss_det(matrix: list[list], one=Fraction(1)):
    """Determinant over an integral domain using only exact divisions."""
    n = len(matrix)
    if n == 0:
        return one
    m = [list(row) for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return one * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pivot - mik * row_k[j], prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_matrix(f: list, g: list, zero) -> list[list]:
    """Sylvester matrix from ascending coefficient lists of f and g."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = list(reversed(f)), list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fd + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gd + [zero] * (size - n - 1 - i))
    return rows


def resultant(f, g):
    """res(f, g) for two UniPolys (a rational) or two BiPolys in Y (a UniPoly in X).

    A constant argument c against a polynomial of degree m gives c**m; two
    constants give 1.
    """
    if isinstance(f, BiPoly) and isinstance(g, BiPoly):
        if f.is_zero() or g.is_zero():
            raise ZeroPolynomialError("resultant with the zero polynomial")
        return _bi_resultant(f, g)
    if isinstance(f, UniPoly) and isinstance(g, UniPoly):
        if f.is_zero() or g.is_zero():
            raise ZeroPolynomialError("resultant with the zero polynomial")
        mat = sylvester_matrix(list(f.coeffs), list(g.coeffs), Fraction(0))
        return bareiss_det(mat)
    raise TypeError("resultant needs two UniPoly or two BiPoly arguments")


def _bi_resultant(f: BiPoly, g: BiPoly) -> UniPoly:
    from .series import interpolate_rational

    m, n = f.deg_y, g.deg_y
    if m == 0 and n == 0:
        return UniPoly([1])
    # each term of the determinant has n entries from f and m from g
    bound = n * f.deg_x + m * g.deg_x
    # res(a*F, b*G) = a**n * b**m * res(F, G): work with integer F, G
    fd, fi = _integer_rows(f)
    gd, gi = _integer_rows(g)
    scale = Fraction(1, fd ** n * gd ** m)
    nodes = list(range(bound + 1))
    values = []
    for x in nodes:
        fx = [_int_eval(c, x) for c in fi]
        gx = [_int_eval(c, x) for c in gi]
        values.append(bareiss_det(sylvester_matrix(fx, gx, 0), one=1) * scale)
    return interpolate_rational(nodes, values)


def _integer_rows(f: BiPoly) -> tuple[int, list[list[int]]]:
    """(D, rows) with D * f having integer coefficient lists ``rows``."""
    den = 1
    for c in f.y_coeffs:
        for q in c.coeffs:
            den = den * q.denominator // math.gcd(den, q.denominator)
    return den, [[int(q * den) for q in c.coeffs] for c in f.y_coeffs]


def _int_eval(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def discriminant(f: UniPoly) -> Fraction:
    n = f.degree
    if n < 1:
        raise DegreeError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative()) / f.lc
    return r if (n * (n - 1) // 2) % 2 == 0 else -r


def discriminant_y(f: BiPoly) -> UniPoly:
    """Discriminant with respect to Y, a polynomial in X."""
    n = f.deg_y
    if n < 1:
        raise DegreeError("discriminant needs Y-degree >= 1")
    r = resultant(f, f.derivative_y()).exact_div(f.lc)
    return r if (n * (n - 1) // 2) % 2 == 0 else -r


@dataclass(frozen=True)
class RegularityReport:
    is_regular: bool
    leading_coeff_value: Fraction
    discriminant_value: Fraction


def is_regular_value(f: BiPoly, b, disc: UniPoly | None = None) -> RegularityReport:
    """b is regular when a_n(b) != 0 and f_b has n distinct roots.

    ``disc`` lets callers that test many b reuse one discriminant.
    """
    if f.deg_y < 1:
        raise DegreeError("regularity needs Y-degree >= 1")
    b = as_rational(b)
    if disc is None:
        disc = discriminant_y(f)
    lc_val = f.lc(b)
    d_val = disc(b)
    return RegularityReport(lc_val != 0 and d_val != 0, lc_val, d_val)


def nonregular_count_bound(f: BiPoly) -> int:
    """deg a_n + deg disc(f): at most this many b fail to be regular."""
    disc = discriminant_y(f)
    if disc.is_zero():
        raise AlgebraError("discriminant vanishes identically: f has a repeated factor in Y")
    return f.lc.degree + disc.degree
