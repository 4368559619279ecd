"""Exact polynomial types over Q.

Three representations share one coefficient field (``fractions.Fraction``):

* :class:`UniPoly`  -- dense univariate, ``coeffs[i]`` is the coefficient of X**i.
* :class:`MultiPoly` -- sparse in k variables, exponent tuple -> coefficient.
* :class:`BiPoly`   -- the F[X][Y] view, ``y_coeffs[i]`` is a UniPoly in X
  multiplying Y**i.

All three are immutable and normalised on construction, so ``==`` is
structural equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _zpoly
from .errors import (
    NotMonicError,
    VariableCountError,
    ZeroPolynomialError,
)

Rational = Fraction
_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, str or Fraction")
    return Fraction(value)


class UniPoly:
    """Dense univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "UniPoly":
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        out = cls([1])
        for r in roots:
            out = out * cls([-as_rational(r), 1])
        return out

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        from .text import format_poly

        return format_poly(self)

    # -- ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return None

    def __add__(self, other) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative exponent")
        out, base = UniPoly([1]), self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __divmod__(self, other) -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division over Q (divisor need not be monic)."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db, inv = o.degree, 1 / o.lc
        if len(r) - 1 < db:
            return UniPoly(), self
        q = [_ZERO] * (len(r) - db)
        bc = o.coeffs
        while len(r) - 1 >= db:
            c = r[-1] * inv
            shift = len(r) - 1 - db
            q[shift] = c
            if c:
                for i, x in enumerate(bc):
                    r[i + shift] -= c * x
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return UniPoly._raw(q), UniPoly._raw(r)

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- evaluation and calculus --------------------------------------------
    def __call__(self, x):
        acc = 0 * x if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def compose(self, inner: "UniPoly") -> "UniPoly":
        return self(inner)

    def shift(self, b) -> "UniPoly":
        """p(X + b)."""
        return self.compose(UniPoly([b, 1]))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def integer_primitive(self) -> tuple[Fraction, list[int]]:
        """Write self = scale * prim with prim primitive in Z[X], lc(prim) > 0."""
        if self.is_zero():
            return _ZERO, []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        prim = _zpoly.primitive(ints)
        return Fraction(ints[-1], prim[-1] * den), prim

    @classmethod
    def from_ints(cls, coeffs: Sequence[int]) -> "UniPoly":
        return cls._raw([Fraction(c) for c in coeffs])


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q, computed on primitive integer images."""
    if a.is_zero() and b.is_zero():
        return UniPoly()
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    g = _zpoly.gcd(a.integer_primitive()[1], b.integer_primitive()[1])
    return UniPoly.from_ints(g).monic()


def poly_divmod(h: UniPoly, f: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Divide by a monic polynomial: h = f*q + r with deg r < deg f.

    No coefficient of f is ever inverted, so if h and f have integer
    coefficients then so do q and r.
    """
    if f.is_zero():
        raise ZeroPolynomialError("division by the zero polynomial")
    if not f.is_monic():
        raise NotMonicError(f"divisor {f} is not monic")
    r = list(h.coeffs)
    df = f.degree
    q = [_ZERO] * max(0, len(r) - df)
    while len(r) - 1 >= df:
        c = r[-1]
        shift = len(r) - 1 - df
        q[shift] = c
        for i, x in enumerate(f.coeffs):
            r[i + shift] -= c * x
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return UniPoly._raw(q), UniPoly._raw(r)


def minpoly_integral_rescale(m: UniPoly) -> tuple[int, UniPoly]:
    """Least d > 0 with f(X) = d**n * m(X/d) in Z[X]; returns (d, f).

    Coefficient i of f is d**(n-i) * m_i, so each prime power r**e in the
    denominator of m_i forces r**ceil(e/(n-i)) into d.
    """
    if not m.is_monic():
        raise NotMonicError(f"{m} is not monic")
    n = m.degree
    if n < 1:
        raise ValueError("minimal polynomial must have degree >= 1")
    need: dict[int, int] = {}
    for i in range(n):
        for r, e in _factor_int(m[i].denominator).items():
            need[r] = max(need.get(r, 0), -(-e // (n - i)))
    d = 1
    for r, e in need.items():
        d *= r ** e
    f = UniPoly([d ** (n - i) * m[i] for i in range(n)] + [1])
    return d, f


def _factor_int(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables X1..Xk.

    Exponent tuples are 0-indexed internally (position 0 is X1); the public
    ``specialize`` takes the 1-based variable index used in the math.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        if nvars < 0:
            raise VariableCountError("variable count must be nonnegative")
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise VariableCountError(f"bad exponent vector {exps} for {nvars} variables")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, _ZERO) + c
        self.nvars = nvars
        self.terms = {e: c for e, c in sorted(clean.items(), reverse=True) if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = {e: c for e, c in sorted(terms.items(), reverse=True) if c}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        """X_index (1-based)."""
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree_in(self, index: int) -> int:
        """Degree in X_index (1-based); -1 for the zero polynomial."""
        return max((e[index - 1] for e in self.terms), default=-1)

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree_in(i) for i in range(1, self.nvars + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"

    def __str__(self) -> str:
        from .text import format_poly

        return format_poly(self)

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise VariableCountError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, _ZERO) + c
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return MultiPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, _ZERO) + c1 * c2
        return MultiPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        out = MultiPoly.constant(1, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise VariableCountError("point has the wrong number of coordinates")
        total = _ZERO
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= as_rational(x) ** k
            total += term
        return total

    def specialize(self, index: int, b) -> "MultiPoly":
        """Substitute X_index = b; the result has one variable fewer."""
        if not 1 <= index <= self.nvars:
            raise VariableCountError(f"variable index {index} out of range 1..{self.nvars}")
        b = as_rational(b)
        out: dict[tuple, Fraction] = {}
        i = index - 1
        for e, c in self.terms.items():
            rest = e[:i] + e[i + 1:]
            out[rest] = out.get(rest, _ZERO) + c * b ** e[i]
        return MultiPoly._raw(self.nvars - 1, out)

    def to_unipoly(self) -> UniPoly:
        if self.nvars != 1:
            raise VariableCountError("need exactly one variable")
        if not self.terms:
            return UniPoly()
        cs = [_ZERO] * (max(e[0] for e in self.terms) + 1)
        for e, c in self.terms.items():
            cs[e[0]] = c
        return UniPoly(cs)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()), _ZERO)


class BiPoly:
    """Polynomial in F[X][Y] stored densely in Y."""

    __slots__ = ("y_coeffs",)

    def __init__(self, y_coeffs: Iterable = ()):
        cs = [c if isinstance(c, UniPoly) else UniPoly(c) for c in y_coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.y_coeffs: tuple[UniPoly, ...] = tuple(cs)

    @classmethod
    def from_dict(cls, terms: Mapping[tuple[int, int], object]) -> "BiPoly":
        """Build from {(i, j): c} meaning c * X**i * Y**j."""
        if not terms:
            return cls()
        ny = max(j for _, j in terms) + 1
        rows: list[dict[int, Fraction]] = [{} for _ in range(ny)]
        for (i, j), c in terms.items():
            rows[j][i] = rows[j].get(i, _ZERO) + as_rational(c)
        out = []
        for row in rows:
            nx = max(row, default=-1) + 1
            out.append(UniPoly([row.get(i, 0) for i in range(nx)]))
        return cls(out)

    @classmethod
    def from_unipoly_in_x(cls, p: UniPoly) -> "BiPoly":
        return cls([p])

    @classmethod
    def from_unipoly_in_y(cls, p: UniPoly) -> "BiPoly":
        return cls([UniPoly([c]) for c in p.coeffs])

    @property
    def deg_y(self) -> int:
        return len(self.y_coeffs) - 1

    @property
    def deg_x(self) -> int:
        return max((c.degree for c in self.y_coeffs), default=-1)

    @property
    def lc(self) -> UniPoly:
        """Leading coefficient a_n(X) with respect to Y."""
        return self.y_coeffs[-1] if self.y_coeffs else UniPoly()

    def is_zero(self) -> bool:
        return not self.y_coeffs

    def __bool__(self) -> bool:
        return bool(self.y_coeffs)

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): c for j, a in enumerate(self.y_coeffs)
                for i, c in enumerate(a.coeffs) if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.y_coeffs == other.y_coeffs

    def __hash__(self) -> int:
        return hash(("BiPoly", self.y_coeffs))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        from .text import format_poly

        return format_poly(self)

    @staticmethod
    def _coerce(other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly([UniPoly([other])])
        if isinstance(other, UniPoly):
            return BiPoly([other])
        return None

    def __add__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.y_coeffs, o.y_coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly([-c for c in self.y_coeffs])

    def __sub__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction, UniPoly)):
            return BiPoly([c * other for c in self.y_coeffs])
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self.y_coeffs, other.y_coeffs
        if not a or not b:
            return BiPoly()
        out = [UniPoly()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        out = BiPoly([UniPoly([1])])
        for _ in range(n):
            out = out * self
        return out

    def specialize(self, b) -> UniPoly:
        """f_b(Y) = f(b, Y)."""
        b = as_rational(b)
        return UniPoly([c(b) for c in self.y_coeffs])

    def evaluate(self, x, y):
        acc = 0 * y
        for c in reversed(self.y_coeffs):
            acc = acc * y + c(x)
        return acc

    def derivative_y(self) -> "BiPoly":
        return BiPoly([c * i for i, c in enumerate(self.y_coeffs)][1:])

    def map_x(self, fn) -> "BiPoly":
        """Apply fn to every coefficient polynomial a_i(X)."""
        return BiPoly([fn(c) for c in self.y_coeffs])

    def shift_x(self, b) -> "BiPoly":
        """f(X + b, Y)."""
        return self.map_x(lambda c: c.shift(b))

    def swap(self) -> "BiPoly":
        """f(Y, X)."""
        return BiPoly.from_dict({(j, i): c for (i, j), c in self.terms().items()})

    def to_multi(self) -> MultiPoly:
        return MultiPoly(2, self.terms())

    @classmethod
    def from_multi(cls, f: MultiPoly) -> "BiPoly":
        if f.nvars != 2:
            raise VariableCountError("need exactly two variables")
        return cls.from_dict({e: c for e, c in f.terms.items()})

    def normalized(self) -> tuple[Fraction, "BiPoly"]:
        """Split off the rational constant that makes a_n(X) monic."""
        if self.is_zero():
            return _ZERO, self
        c = self.lc.lc
        return c, self * (1 / c)

    def div_exact(self, g: "BiPoly") -> "BiPoly | None":
        """Quotient self / g in Q[X][Y], or None when g does not divide."""
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.y_coeffs)
        dg, lg = g.deg_y, g.lc
        if len(r) - 1 < dg:
            return BiPoly() if not r else None
        q = [UniPoly()] * (len(r) - dg)
        while len(r) - 1 >= dg:
            c, rem = divmod(r[-1], lg)
            if rem:
                return None
            shift = len(r) - 1 - dg
            q[shift] = c
            for i, x in enumerate(g.y_coeffs):
                r[i + shift] = r[i + shift] - c * x
            r.pop()
            while r and r[-1].is_zero():
                r.pop()
        return BiPoly(q) if not r else None

    def pseudo_remainder(self, g: "BiPoly") -> "BiPoly":
        r = self
        dg, lg = g.deg_y, g.lc
        while not r.is_zero() and r.deg_y >= dg:
            shift = r.deg_y - dg
            lr = r.lc
            mono = BiPoly([UniPoly()] * shift + [lr])
            r = r * lg - mono * g
        return r


# -- module-level operations ---------------------------------------------------

def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_neg(a):
    return -a


def specialize(f: BiPoly, b) -> UniPoly:
    return f.specialize(b)


def as_multi(f) -> MultiPoly:
    """View a UniPoly or BiPoly as a MultiPoly in one or two variables."""
    if isinstance(f, MultiPoly):
        return f
    if isinstance(f, BiPoly):
        return f.to_multi()
    if isinstance(f, UniPoly):
        return MultiPoly(1, {(i,): c for i, c in enumerate(f.coeffs)})
    raise TypeError(f"not a polynomial: {f!r}")


def specialize_multi(f: MultiPoly, var_index: int, b) -> MultiPoly:
    return as_multi(f).specialize(var_index, b)


def content_y(f: BiPoly) -> UniPoly:
    """Monic gcd over Q[X] of the Y-coefficients a_0(X), ..., a_n(X)."""
    if f.is_zero():
        raise ZeroPolynomialError("content of the zero polynomial")
    g = UniPoly()
    for c in f.y_coeffs:
        g = uni_gcd(g, c)
        if g.degree == 0:
            break
    return g


def primitive_part_y(f: BiPoly) -> BiPoly:
    c = content_y(f)
    if c.degree == 0:
        return f
    return f.map_x(lambda a: a.exact_div(c))


def bi_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Gcd in Q[X][Y] with a_n(X) made monic; primitive-PRS in Y."""
    if a.is_zero():
        return b.normalized()[1] if b else b
    if b.is_zero():
        return a.normalized()[1]
    cont = uni_gcd(content_y(a), content_y(b))
    a, b = primitive_part_y(a), primitive_part_y(b)
    if a.deg_y < b.deg_y:
        a, b = b, a
    while not b.is_zero():
        if b.deg_y == 0:
            a = BiPoly([UniPoly([1])])
            break
        r = a.pseudo_remainder(b)
        a, b = b, (primitive_part_y(r) if r else r)
    return (primitive_part_y(a) * cont).normalized()[1]


def bi_squarefree_part(f: BiPoly) -> BiPoly:
    """Product of the distinct irreducible factors of positive Y-degree."""
    p = primitive_part_y(f)
    if p.deg_y < 1:
        return BiPoly([UniPoly([1])])
    g = bi_gcd(p, p.derivative_y())
    q = p.div_exact(g)
    assert q is not None
    return q.normalized()[1]
