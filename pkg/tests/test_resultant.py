from __future__ import annotations

import random
from fractions import Fraction

import pytest

import oracles
from hilbertia.errors import AlgebraError, DegreeError, ZeroPolynomialError
from hilbertia.poly import BiPoly, UniPoly
from hilbertia.resultant import (bareiss_det, discriminant, discriminant_y, is_regular_value,
                                 nonregular_count_bound, resultant, sylvester_matrix)
from hilbertia.text import parse_poly

X = UniPoly.x()


def bi(text):
    return parse_poly(text, ("X", "Y"))


def rnd_uni(rng, deg):
    while True:
        f = UniPoly([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(deg + 1)])
        if f.degree == deg:
            return f


class TestResultant:
    def test_examples(self):
        assert resultant(X - 1, X - 2) == -1
        assert resultant(X ** 2 + 1, UniPoly([1])) == 1
        assert resultant(X ** 2 - 1, X - 1) == 0

    def test_constant_conventions(self):
        assert resultant(X ** 3 + X, UniPoly([2])) == 8
        assert resultant(UniPoly([3]), UniPoly([5])) == 1

    def test_zero(self):
        with pytest.raises(ZeroPolynomialError):
            resultant(X, UniPoly())

    def test_product_of_root_differences(self):
        # res(f, g) = prod over roots of f and g of (a - b) for monic f, g
        f = UniPoly.from_roots([1, 2, Fraction(1, 3)])
        g = UniPoly.from_roots([-1, 5])
        expected = 1
        for a in (1, 2, Fraction(1, 3)):
            for b in (-1, 5):
                expected *= a - b
        assert resultant(f, g) == expected

    def test_antisymmetry(self):
        rng = random.Random(21)
        for _ in range(200):
            f, g = rnd_uni(rng, rng.randint(1, 5)), rnd_uni(rng, rng.randint(1, 5))
            assert resultant(f, g) == (-1) ** (f.degree * g.degree) * resultant(g, f)

    def test_bipoly_agrees_with_polynomial_bareiss(self):
        rng = random.Random(22)
        for _ in range(50):
            f = BiPoly([rnd_uni(rng, rng.randint(0, 2)) for _ in range(rng.randint(2, 4))])
            g = BiPoly([rnd_uni(rng, rng.randint(0, 2)) for _ in range(rng.randint(2, 3))])
            direct = bareiss_det(sylvester_matrix(list(f.y_coeffs), list(g.y_coeffs), UniPoly()),
                                 one=UniPoly([1]))
            assert resultant(f, g) == direct

    def test_bareiss_matches_leibniz(self):
        from itertools import permutations

        rng = random.Random(23)
        for _ in range(30):
            n = rng.randint(1, 5)
            m = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            total = Fraction(0)
            for perm in permutations(range(n)):
                sign = 1
                for i in range(n):
                    for j in range(i + 1, n):
                        if perm[i] > perm[j]:
                            sign = -sign
                term = Fraction(sign)
                for i, j in enumerate(perm):
                    term *= m[i][j]
                total += term
            assert bareiss_det(m) == total


class TestDiscriminant:
    def test_examples(self):
        assert discriminant_y(bi("Y^2 - X")) == 4 * X
        assert discriminant_y(bi("Y^2 + Y + 1")) == UniPoly([-3])
        for p, q in [(1, 1), (-3, 2), (Fraction(1, 2), -5)]:
            f = UniPoly([q, p, 0, 1])
            assert discriminant(f) == -4 * Fraction(p) ** 3 - 27 * Fraction(q) ** 2

    def test_quadratic_formula(self):
        assert discriminant(UniPoly([5, 3, 2])) == 3 ** 2 - 4 * 2 * 5

    def test_degree_zero(self):
        with pytest.raises(DegreeError):
            discriminant_y(bi("X + 1"))

    def test_numeric_oracle(self):
        rng = random.Random(24)
        for _ in range(100):
            f = UniPoly([rng.randint(-6, 6) for _ in range(rng.randint(2, 5))] + [rng.randint(1, 4)])
            exact = float(discriminant(f))
            approx = oracles.numeric_discriminant(f.coeffs)
            assert abs(exact - approx) <= 1e-6 * max(1.0, abs(exact))

    def test_specialization_identity(self):
        rng = random.Random(25)
        done = 0
        while done < 200:
            f = BiPoly([UniPoly([rng.randint(-4, 4) for _ in range(3)]) for _ in range(rng.randint(3, 5))])
            b = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            if f.deg_y < 2 or f.lc(b) == 0:
                continue
            assert discriminant_y(f)(b) == discriminant(f.specialize(b))
            done += 1


class TestRegularity:
    def test_examples(self):
        f = bi("Y^2 - X")
        assert not is_regular_value(f, 0).is_regular
        rep = is_regular_value(f, 1)
        assert rep.is_regular and rep.discriminant_value == 4 and rep.leading_coeff_value == 1
        rep = is_regular_value(bi("X*Y + 1"), 0)
        assert not rep.is_regular and rep.leading_coeff_value == 0

    def test_degree_zero(self):
        with pytest.raises(DegreeError):
            is_regular_value(bi("X"), 1)

    def test_bound_examples(self):
        assert nonregular_count_bound(bi("Y^2 - X")) == 1
        assert nonregular_count_bound(bi("Y^2 + Y + 1")) == 0
        assert nonregular_count_bound(bi("Y^2 - X^2")) == 2

    def test_repeated_factor(self):
        with pytest.raises(AlgebraError):
            nonregular_count_bound(bi("(Y - X)^2"))

    def test_regular_means_distinct_roots(self):
        import numpy as np

        f = bi("Y^3 - X*Y + 1")
        for b in range(-5, 6):
            rep = is_regular_value(f, b)
            roots = np.roots([float(c) for c in reversed(f.specialize(b).coeffs)])
            gaps = min(abs(r - s) for i, r in enumerate(roots) for s in roots[i + 1:])
            assert rep.is_regular == (gaps > 1e-6)

    def test_count_bound_random(self):
        rng = random.Random(26)
        for _ in range(30):
            f = BiPoly([UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
                        for _ in range(rng.randint(2, 4))])
            if f.deg_y < 1 or discriminant_y(f).is_zero():
                continue
            disc = discriminant_y(f)
            bad = sum(1 for b in range(-100, 101) if not is_regular_value(f, b, disc).is_regular)
            assert bad <= nonregular_count_bound(f)
