"""Independent reference implementations used only by the tests.

Nothing here imports the factorization, resultant or series code of the
package; each oracle is a deliberately naive method (trial division, numeric
root finding with exact confirmation, contour integrals).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from itertools import combinations

import numpy as np


def divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def int_eval(coeffs: list[int], p: int, q: int) -> int:
    """q**n * f(p/q) for ascending integer coefficients."""
    n = len(coeffs) - 1
    return sum(c * p ** i * q ** (n - i) for i, c in enumerate(coeffs))


def to_ints(coeffs) -> list[int]:
    """Clear denominators of ascending rational coefficients, strip trailing zeros."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    den = 1
    for c in cs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g else ints


def exhaustive_rational_roots(coeffs: list[int]) -> set[Fraction]:
    """Every rational root of a nonzero integer polynomial by direct search."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    roots = set()
    if not cs:
        raise ValueError("zero polynomial")
    if cs[0] == 0:
        roots.add(Fraction(0))
        while cs[0] == 0:
            cs = cs[1:]
    if len(cs) == 1:
        return roots
    bound_p, bound_q = abs(cs[0]), abs(cs[-1])
    for q in range(1, bound_q + 1):
        for p in range(-bound_p, bound_p + 1):
            if p and math.gcd(p, q) == 1 and int_eval(cs, p, q) == 0:
                roots.add(Fraction(p, q))
    return roots


def _divides(f: list[int], g: list[int]) -> bool:
    """Trial division in Q[x] with exact fractions."""
    r = [Fraction(c) for c in f]
    while len(r) >= len(g):
        c = r[-1] / g[-1]
        shift = len(r) - len(g)
        for i, x in enumerate(g):
            r[i + shift] -= c * x
        r.pop()
    return all(c == 0 for c in r)


def has_quadratic_factor(f: list[int]) -> bool:
    """Does the integer quartic f have a factor of degree 2 over Q?

    Candidates come from pairs of numeric roots scaled by each divisor of the
    leading coefficient; each is confirmed by exact division.
    """
    roots = np.roots(list(reversed(f)))
    for i, j in combinations(range(len(roots)), 2):
        s, p = roots[i] + roots[j], roots[i] * roots[j]
        if abs(s.imag) > 1e-6 or abs(p.imag) > 1e-6:
            continue
        for g2 in divisors(f[-1]):
            g1, g0 = round(-g2 * s.real), round(g2 * p.real)
            if _divides(f, [g0, g1, g2]):
                return True
    return False


def brute_irreducible(coeffs) -> bool:
    """Irreducibility over Q for degree <= 4 by exhaustive splitting search."""
    f = to_ints(coeffs)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if n > 4:
        raise ValueError("oracle only covers degree <= 4")
    if exhaustive_rational_roots_divisors(f):
        return False
    if n == 4 and has_quadratic_factor(f):
        return False
    return True


def exhaustive_rational_roots_divisors(f: list[int]) -> set[Fraction]:
    """Rational roots via p | a_0, q | a_n (plain trial, no factoring)."""
    cs = list(f)
    roots = set()
    if cs[0] == 0:
        roots.add(Fraction(0))
        while cs[0] == 0:
            cs = cs[1:]
    if len(cs) == 1:
        return roots
    for q in divisors(cs[-1]):
        for p in divisors(cs[0]):
            for s in (p, -p):
                if math.gcd(p, q) == 1 and int_eval(cs, s, q) == 0:
                    roots.add(Fraction(s, q))
    return roots


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def numeric_discriminant(coeffs) -> float:
    """a_n**(2n-2) * prod_{i<j} (r_i - r_j)**2 from numeric roots."""
    cs = [float(c) for c in coeffs]
    n = len(cs) - 1
    roots = np.roots(list(reversed(cs)))
    prod = complex(1)
    for i, j in combinations(range(n), 2):
        prod *= (roots[i] - roots[j]) ** 2
    return (cs[-1] ** (2 * n - 2) * prod).real


def lagrange(nodes, values, x) -> Fraction:
    total = Fraction(0)
    for i, (ti, vi) in enumerate(zip(nodes, values)):
        term = Fraction(vi)
        for j, tj in enumerate(nodes):
            if j != i:
                term *= Fraction(x - tj, ti - tj)
        total += term
    return total


def root_series_numeric(terms: dict, b: float, y0: float, K: int, radius: float,
                        samples: int = 128) -> list[complex]:
    """Taylor coefficients of the root branch through (b, y0) by a Cauchy integral.

    ``terms`` maps (i, j) to the coefficient of X**i Y**j.  The branch is
    tracked with Newton's method along a ray and then around the circle
    |X - b| = radius; coefficient k is the k-th Fourier mode divided by radius**k.
    """

    def f(x, y):
        return sum(complex(c) * x ** i * y ** j for (i, j), c in terms.items())

    def fy(x, y):
        return sum(complex(c) * j * x ** i * y ** (j - 1) for (i, j), c in terms.items() if j)

    def newton(x, y):
        for _ in range(50):
            step = f(x, y) / fy(x, y)
            y -= step
            if abs(step) < 1e-15 * max(1.0, abs(y)):
                break
        return y

    y = complex(y0)
    for s in range(1, 65):
        y = newton(b + radius * s / 64, y)
    sub = 8
    vals = []
    for m in range(samples * sub):
        theta = 2 * math.pi * m / (samples * sub)
        y = newton(b + radius * cmath.exp(1j * theta), y)
        if m % sub == 0:
            vals.append(y)
    out = []
    for k in range(K + 1):
        acc = sum(v * cmath.exp(-2j * math.pi * k * m / samples) for m, v in enumerate(vals))
        out.append(acc / samples / radius ** k)
    out[0] -= y0
    return out


def cubic_is_cyclic(coeffs: list[int]) -> bool:
    """For a monic integer irreducible cubic: is theta = a1 a2^2 + a2 a3^2 + a3 a1^2 an integer?"""
    roots = np.roots(list(reversed([float(c) for c in coeffs])))
    a1, a2, a3 = roots
    theta = a1 * a2 ** 2 + a2 * a3 ** 2 + a3 * a1 ** 2
    return abs(theta.imag) < 1e-6 and abs(theta.real - round(theta.real)) < 1e-6
