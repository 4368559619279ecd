from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import bipolys, multipolys, rationals, unipolys
from hilbertia.errors import NotMonicError, VariableCountError, ZeroPolynomialError
from hilbertia.poly import (BiPoly, MultiPoly, UniPoly, as_rational, content_y,
                            minpoly_integral_rescale, poly_add, poly_divmod, poly_mul,
                            poly_neg, primitive_part_y, specialize, specialize_multi, uni_gcd)
from hilbertia.text import parse_multi, parse_poly

X = UniPoly.x()


def bi(text):
    return parse_poly(text, ("X", "Y"))


def multi(text, names=("X1", "X2", "X3")):
    return parse_poly(text, names)


class TestRational:
    def test_reduced(self):
        q = as_rational(Fraction(6, -4))
        assert (q.numerator, q.denominator) == (-3, 2)
        assert as_rational(0) == Fraction(0, 1)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            as_rational(0.5)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert poly_mul(X + 1, X - 1) == X ** 2 - 1

    def test_additive_identity(self):
        f = UniPoly([1, 2, 3])
        assert poly_add(f, UniPoly()) == f
        assert poly_add(f, poly_neg(f)).is_zero()

    def test_bipoly_expansion(self):
        assert bi("Y - X") * bi("Y + X") == bi("Y^2 - X^2")

    def test_zero_is_empty(self):
        assert UniPoly([0, 0]).coeffs == ()
        assert (X - X).degree == -1
        assert MultiPoly(2).terms == {}

    def test_variable_mismatch(self):
        with pytest.raises(VariableCountError):
            MultiPoly.variable(1, 2) + MultiPoly.variable(1, 3)

    def test_multi_lex_order(self):
        f = multi("X3 + X1*X2 + X1^2")
        assert list(f.terms) == sorted(f.terms, reverse=True)

    @given(unipolys(), unipolys(), unipolys())
    @settings(max_examples=100, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


class TestDivmod:
    def test_single_step(self):
        assert poly_divmod(X ** 2 + 1, X) == (X, UniPoly([1]))

    def test_long_division(self):
        assert poly_divmod(X ** 3, X - 1) == (X ** 2 + X + 1, UniPoly([1]))

    def test_exact(self):
        f = X ** 2 + 3
        assert poly_divmod(f, f) == (UniPoly([1]), UniPoly())

    def test_errors(self):
        with pytest.raises(NotMonicError):
            poly_divmod(X, 2 * X)
        with pytest.raises(ZeroPolynomialError):
            poly_divmod(X, UniPoly())

    def test_random_monic(self):
        rng = random.Random(11)
        for _ in range(500):
            n = rng.randint(1, 5)
            f = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)] + [1])
            h = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                         for _ in range(rng.randint(0, 9))])
            q, r = poly_divmod(h, f)
            assert f * q + r == h and r.degree < f.degree

    def test_integers_stay_integral(self):
        rng = random.Random(12)
        for _ in range(200):
            f = UniPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 4))] + [1])
            h = UniPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 8))])
            q, r = poly_divmod(h, f)
            assert q.is_integral() and r.is_integral()


class TestSpecialize:
    def test_examples(self):
        assert specialize(bi("Y^2 - X"), 4) == UniPoly([-4, 0, 1])
        assert specialize(bi("X*Y + 1"), 0) == UniPoly([1])
        assert specialize(bi("(X^2 + 1)*Y^3"), 2) == UniPoly([0, 0, 0, 5])

    def test_multi_examples(self):
        assert specialize_multi(multi("X3^2 - X1*X2"), 1, 1) == parse_multi("X3^2 - X2", ("X2", "X3"))
        assert specialize_multi(multi("X1", ("X1",)), 1, 7) == MultiPoly.constant(7, 0)
        assert specialize_multi(multi("X2 + X3"), 1, 5) == parse_multi("X2 + X3", ("X2", "X3"))

    def test_index_out_of_range(self):
        with pytest.raises(VariableCountError):
            specialize_multi(multi("X1"), 4, 1)

    @given(bipolys(), bipolys(), rationals)
    @settings(max_examples=200, deadline=None)
    def test_multiplicative(self, f, g, b):
        assert specialize(f * g, b) == specialize(f, b) * specialize(g, b)

    @given(multipolys(3), st.integers(1, 3), rationals, st.lists(rationals, min_size=2, max_size=2))
    @settings(max_examples=100, deadline=None)
    def test_multi_matches_evaluation(self, f, idx, b, rest):
        g = specialize_multi(f, idx, b)
        point = list(rest)
        point.insert(idx - 1, b)
        assert g.evaluate(rest) == f.evaluate(point)


class TestContent:
    def test_examples(self):
        f = bi("X*Y^2 - X^3")
        assert content_y(f) == X and primitive_part_y(f) == bi("Y^2 - X^2")
        assert content_y(bi("Y^2 - X")) == UniPoly([1])
        g = bi("(X^2 + X)*Y + X + 1")
        assert content_y(g) == X + 1 and primitive_part_y(g) == bi("X*Y + 1")

    def test_zero(self):
        with pytest.raises(ZeroPolynomialError):
            content_y(BiPoly())

    def test_random_reassembly(self):
        rng = random.Random(13)
        for _ in range(500):
            f = BiPoly([UniPoly([Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                                 for _ in range(rng.randint(1, 5))])
                        for _ in range(rng.randint(1, 5))])
            if f.is_zero():
                continue
            c = content_y(f)
            assert c.is_monic()
            assert primitive_part_y(f) * c == f

    def test_gcd_monic(self):
        assert uni_gcd((X - 1) * (X + 2) * 3, (X - 1) * (X - 5)) == X - 1


class TestRescale:
    def test_examples(self):
        m = UniPoly([Fraction(1, 3), Fraction(1, 2), 1])
        assert minpoly_integral_rescale(m) == (6, UniPoly([12, 3, 1]))
        assert minpoly_integral_rescale(X - Fraction(1, 2)) == (2, X - 1)
        m = X ** 3 + X + 1
        assert minpoly_integral_rescale(m) == (1, m)

    def test_not_monic(self):
        with pytest.raises(NotMonicError):
            minpoly_integral_rescale(2 * X + 1)

    def test_random_properties(self):
        rng = random.Random(14)
        for _ in range(200):
            n = rng.randint(1, 4)
            m = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 12)) for _ in range(n)] + [1])
            d, f = minpoly_integral_rescale(m)
            assert f.is_monic() and f.is_integral()
            # f(d*X) = d**n * m(X)
            assert f.compose(UniPoly([0, d])) == m * d ** n
            # minimality: no smaller d works
            for e in range(1, d):
                assert not all((e ** (n - i) * m[i]).denominator == 1 for i in range(n))
