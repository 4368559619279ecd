from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hilbertia.errors import DegreeBoundError, ZeroPolynomialError
from hilbertia.factor import (Verdict, factor_bipoly_small, factor_unipoly, is_irreducible_bi,
                              is_irreducible_uni, rational_roots, squarefree_decomposition,
                              witness_ok)
from hilbertia.poly import BiPoly, UniPoly
from hilbertia.text import parse_poly

X = UniPoly.x()


def uni(text):
    return parse_poly(text, ("X",))


def bi(text):
    return parse_poly(text, ("X", "Y"))


class TestRationalRoots:
    def test_examples(self):
        assert rational_roots(uni("6*X^2 - 5*X + 1")) == {Fraction(1, 2), Fraction(1, 3)}
        assert rational_roots(uni("X^2 - 2")) == set()
        assert rational_roots(uni("X^3 - X")) == {-1, 0, 1}

    def test_zero(self):
        with pytest.raises(ZeroPolynomialError):
            rational_roots(UniPoly())

    def test_constant(self):
        assert rational_roots(UniPoly([5])) == set()

    def test_planted_roots(self):
        rng = random.Random(31)
        for _ in range(500):
            roots = {Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(rng.randint(1, 3))}
            f = UniPoly.from_roots(sorted(roots)) * (X ** 2 + rng.randint(1, 7))
            f = f * rng.randint(1, 9)
            assert rational_roots(f) == roots

    def test_exhaustive_oracle(self):
        rng = random.Random(32)
        for _ in range(200):
            coeffs = [rng.randint(-8, 8) for _ in range(rng.randint(2, 5))] + [rng.randint(1, 6)]
            assert rational_roots(UniPoly(coeffs)) == oracles.exhaustive_rational_roots(coeffs)

    def test_large_end_coefficients(self):
        big = 10 ** 13 + 37
        f = (X - Fraction(big, 3)) * (X ** 2 + 1)
        assert rational_roots(f) == {Fraction(big, 3)}

    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=4))
    @settings(max_examples=100, deadline=None)
    def test_monic_roots_are_integers(self, roots):
        f = UniPoly.from_roots(roots) * (X ** 2 + X + 1)
        found = rational_roots(f)
        assert found == set(map(Fraction, roots))
        assert all(r.denominator == 1 for r in found)


class TestFactorUni:
    def test_examples(self):
        assert str(factor_unipoly(uni("X^4 - 1"))) == "(X - 1)(X + 1)(X^2 + 1)"
        assert is_irreducible_uni(uni("X^4 + 1"))
        assert str(factor_unipoly(uni("6*X^2 - 6"))) == "6*(X - 1)(X + 1)"
        assert str(factor_unipoly(uni("X*(X + 1)^2*(X^2 - 2)^3"))) == "X(X + 1)^2(X^2 - 2)^3"

    def test_degree_conventions(self):
        assert not is_irreducible_uni(UniPoly([3]))
        assert is_irreducible_uni(uni("7*X + 2"))
        with pytest.raises(ZeroPolynomialError):
            is_irreducible_uni(UniPoly())
        with pytest.raises(ZeroPolynomialError):
            factor_unipoly(UniPoly())

    def test_squarefree_decomposition(self):
        f = X * (X + 1) ** 2 * (X - 2) ** 2 * (X ** 2 + 3) ** 3
        parts = dict((m, s) for s, m in squarefree_decomposition(f))
        assert parts == {1: X, 2: (X + 1) * (X - 2), 3: X ** 2 + 3}

    def test_swinnerton_dyer(self):
        # irreducible over Q but splits mod every prime
        assert is_irreducible_uni(uni("X^4 - 10*X^2 + 1"))
        assert is_irreducible_uni(uni("X^8 - 40*X^6 + 352*X^4 - 960*X^2 + 576"))

    def test_exhaustive_low_degree(self):
        mismatches = []
        for n in range(1, 5):
            for tail in itertools.product(range(-3, 4), repeat=n):
                for lead in (1, 2, 3, -1, -2, -3):
                    coeffs = list(tail) + [lead]
                    if is_irreducible_uni(UniPoly(coeffs)) != oracles.brute_irreducible(coeffs):
                        mismatches.append(coeffs)
        assert not mismatches

    def test_multiply_back(self):
        rng = random.Random(33)
        for _ in range(500):
            f = UniPoly([1])
            for _ in range(rng.randint(1, 4)):
                f = f * UniPoly([Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                                 for _ in range(rng.randint(1, 3))] + [rng.randint(1, 3)])
            fac = factor_unipoly(f)
            assert fac.expand() == f
            for g, m in fac.factors:
                assert g.is_monic() and m >= 1 and is_irreducible_uni(g)

    def test_products_are_reducible(self):
        rng = random.Random(34)
        for _ in range(200):
            a = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 3))] + [1])
            b = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 3))] + [1])
            assert not is_irreducible_uni(a * b)


class TestFactorBi:
    def test_examples(self):
        fac = factor_bipoly_small(bi("X*Y^2 - X^3"))
        assert fac.x_part == X
        assert fac.expand() == bi("X*Y^2 - X^3")
        assert sorted(map(str, fac.irreducible_factors())) == sorted(
            [str(bi("Y - X")), str(bi("Y + X"))])

    def test_irreducible_stays_whole(self):
        f = bi("Y^2 - X")
        fac = factor_bipoly_small(f)
        assert fac.irreducible_factors() == [f]

    def test_repeated_factor(self):
        f = bi("(Y^2 - X)^2*(X*Y + 1)")
        fac = factor_bipoly_small(f)
        mults = {str(g): m for g, m in fac.factors}
        assert sorted(mults.values()) == [1, 2]
        assert fac.expand() == f

    def test_bounds(self):
        with pytest.raises(DegreeBoundError):
            factor_bipoly_small(bi("Y^7 - X"))
        with pytest.raises(DegreeBoundError):
            factor_bipoly_small(bi("Y - X^13"))
        assert factor_bipoly_small(bi("Y^7 - X"), None, None).irreducible_factors() == [bi("Y^7 - X")]

    def test_random_products(self):
        rng = random.Random(35)
        for _ in range(60):
            parts = []
            for _ in range(rng.randint(2, 3)):
                while True:
                    g = BiPoly([UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
                                for _ in range(rng.randint(2, 3))])
                    if g.deg_y >= 1:
                        break
                parts.append(g)
            f = parts[0]
            for g in parts[1:]:
                f = f * g
            fac = factor_bipoly_small(f)
            assert fac.expand() == f
            assert len(fac.irreducible_factors()) >= len([g for g in parts if g.deg_y >= 1])
            for g in fac.irreducible_factors():
                assert is_irreducible_bi(g).verdict is Verdict.IRREDUCIBLE


class TestIrredBi:
    def test_examples(self):
        cert = is_irreducible_bi(bi("Y^2 - X"))
        assert cert.verdict is Verdict.IRREDUCIBLE and cert.witness_b == 2
        cert = is_irreducible_bi(bi("Y^2 - X^2"))
        assert cert.verdict is Verdict.REDUCIBLE
        a, b = cert.reducible_witness
        assert a * b == bi("Y^2 - X^2")
        assert is_irreducible_bi(bi("X^2 + 1")).verdict is Verdict.NOT_APPLICABLE

    def test_content(self):
        cert = is_irreducible_bi(bi("X*Y + X"))
        assert cert.verdict is Verdict.REDUCIBLE and not cert.content_ok
        assert cert.reducible_witness[0] == BiPoly([X])

    def test_budget(self):
        with pytest.raises(ValueError):
            is_irreducible_bi(bi("Y^2 - X"), search_budget=0)

    def test_witness_is_valid(self):
        rng = random.Random(36)
        for _ in range(100):
            f = BiPoly([UniPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
                        for _ in range(rng.randint(2, 4))])
            if f.deg_y < 1:
                continue
            cert = is_irreducible_bi(f)
            if cert.verdict is Verdict.IRREDUCIBLE:
                assert witness_ok(f, cert.witness_b)
            elif cert.verdict is Verdict.REDUCIBLE:
                a, b = cert.reducible_witness
                assert a * b == f

    def test_products_rejected(self):
        rng = random.Random(37)
        for _ in range(100):
            a = BiPoly([UniPoly([rng.randint(-3, 3) for _ in range(2)]), UniPoly([1])])
            b = BiPoly([UniPoly([rng.randint(-3, 3) for _ in range(3)]), UniPoly([0, 1]), UniPoly([1])])
            assert is_irreducible_bi(a * b).verdict is Verdict.REDUCIBLE
