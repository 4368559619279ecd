"""Dense integer and mod-p polynomial kernel.

Polynomials here are plain ``list[int]`` in ascending order with no trailing
zeros (the zero polynomial is ``[]``).  This is the fast path underneath
:mod:`hilbertia.factor`; nothing in here knows about ``Fraction``.

The factoring routine is the classical Zassenhaus scheme: pick a small prime,
split modulo p (distinct-degree then Cantor-Zassenhaus equal-degree), Hensel
lift the split to p**l past the Mignotte bound, then recombine subsets of the
lifted factors by trial division over Z.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

ZPoly = list  # list[int], ascending


def strip(p: ZPoly) -> ZPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: ZPoly) -> int:
    return len(p) - 1


def add(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return strip(out)


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return strip(out)


def mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip(out)


def scale(a: ZPoly, c: int) -> ZPoly:
    if c == 0:
        return []
    return [c * x for x in a]


def content(a: ZPoly) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def primitive(a: ZPoly) -> ZPoly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def derivative(a: ZPoly) -> ZPoly:
    return strip([i * a[i] for i in range(1, len(a))])


def prem(a: ZPoly, b: ZPoly) -> ZPoly:
    """Pseudo-remainder of a by b (b nonzero)."""
    r = list(a)
    db, lb = deg(b), b[-1]
    while r and deg(r) >= db:
        shift, lr = deg(r) - db, r[-1]
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        strip(r)
    return r


def divexact(a: ZPoly, b: ZPoly) -> ZPoly | None:
    """Quotient a/b if b divides a in Z[x], else None."""
    r = list(a)
    db, lb = deg(b), b[-1]
    if deg(r) < db:
        return [] if not r else None
    q = [0] * (deg(r) - db + 1)
    while r and deg(r) >= db:
        c, rem = divmod(r[-1], lb)
        if rem:
            return None
        shift = deg(r) - db
        q[shift] = c
        for i, x in enumerate(b):
            r[i + shift] -= c * x
        strip(r)
    return q if not r else None


def gcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd over Z via the primitive remainder sequence."""
    a, b = primitive(a), primitive(b)
    if not a:
        return b
    if not b:
        return a
    ca, cb = content(a), content(b)
    if deg(a) < deg(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, primitive(r)
    g = math.gcd(ca, cb)
    return scale(primitive(a), g) if g > 1 else primitive(a)


def max_norm(a: ZPoly) -> int:
    return max((abs(c) for c in a), default=0)


# ---------------------------------------------------------------------------
# arithmetic modulo m (m prime unless a function says otherwise)


def reduce(a: ZPoly, m: int) -> ZPoly:
    return strip([c % m for c in a])


def symmetric(a: ZPoly, m: int) -> ZPoly:
    half = m // 2
    return strip([(c % m) - m if (c % m) > half else c % m for c in a])


def mul_mod(a: ZPoly, b: ZPoly, m: int) -> ZPoly:
    return reduce(mul(a, b), m)


def divmod_monic(a: ZPoly, b: ZPoly, m: int) -> tuple[ZPoly, ZPoly]:
    """Division by a monic b over Z/mZ for any modulus m."""
    r = reduce(a, m)
    db = deg(b)
    if deg(r) < db:
        return [], r
    q = [0] * (deg(r) - db + 1)
    while r and deg(r) >= db:
        c, shift = r[-1], deg(r) - db
        q[shift] = c
        for i, x in enumerate(b):
            r[i + shift] = (r[i + shift] - c * x) % m
        strip(r)
    return strip(q), r


def monic_mod(a: ZPoly, p: int) -> ZPoly:
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def divmod_p(a: ZPoly, b: ZPoly, p: int) -> tuple[ZPoly, ZPoly]:
    inv = pow(b[-1], -1, p)
    q, r = divmod_monic(a, [(c * inv) % p for c in b], p)
    return reduce(scale(q, inv), p), r


def gcd_p(a: ZPoly, b: ZPoly, p: int) -> ZPoly:
    a, b = reduce(a, p), reduce(b, p)
    while b:
        a, b = b, divmod_p(a, b, p)[1]
    return monic_mod(a, p) if a else []


def exgcd_p(a: ZPoly, b: ZPoly, p: int) -> tuple[ZPoly, ZPoly, ZPoly]:
    """Return (g, s, t) with s*a + t*b = g monic, over GF(p)."""
    r0, r1 = reduce(a, p), reduce(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, reduce(sub(s0, mul(q, s1)), p)
        t0, t1 = t1, reduce(sub(t0, mul(q, t1)), p)
    inv = pow(r0[-1], -1, p)
    return (reduce(scale(r0, inv), p), reduce(scale(s0, inv), p),
            reduce(scale(t0, inv), p))


def powmod_p(base: ZPoly, e: int, modulus: ZPoly, p: int) -> ZPoly:
    modulus = monic_mod(modulus, p)
    result = [1]
    base = divmod_monic(base, modulus, p)[1]
    while e:
        if e & 1:
            result = divmod_monic(mul(result, base), modulus, p)[1]
        e >>= 1
        if e:
            base = divmod_monic(mul(base, base), modulus, p)[1]
    return result


def is_squarefree_p(a: ZPoly, p: int) -> bool:
    a = reduce(a, p)
    da = reduce(derivative(a), p)
    if not da:
        return False
    return deg(gcd_p(a, da, p)) == 0


def _equal_degree_split(f: ZPoly, d: int, p: int, rng: random.Random) -> list[ZPoly]:
    if deg(f) == d:
        return [f]
    n = deg(f)
    while True:
        a = strip([rng.randrange(p) for _ in range(n)])
        if deg(a) < 1:
            continue
        g = gcd_p(a, f, p)
        if 0 < deg(g) < n:
            break
        b = sub(powmod_p(a, (p ** d - 1) // 2, f, p), [1])
        g = gcd_p(b, f, p)
        if 0 < deg(g) < n:
            break
    h = divmod_p(f, g, p)[0]
    return (_equal_degree_split(monic_mod(g, p), d, p, rng)
            + _equal_degree_split(monic_mod(h, p), d, p, rng))


def factor_mod_p(f: ZPoly, p: int) -> list[ZPoly]:
    """Monic irreducible factors of a squarefree f over GF(p), p odd."""
    f = monic_mod(reduce(f, p), p)
    rng = random.Random(p * 1_000_003 + deg(f))
    out: list[ZPoly] = []
    h = [0, 1]
    i = 0
    while deg(f) >= 2 * (i + 1):
        i += 1
        h = powmod_p(h, p, f, p)
        g = gcd_p(sub(h, [0, 1]), f, p)
        if deg(g) > 0:
            out.extend(_equal_degree_split(g, i, p, rng))
            f = divmod_p(f, g, p)[0]
            h = divmod_monic(h, f, p)[1] if deg(f) > 0 else h
    if deg(f) > 0:
        out.append(monic_mod(f, p))
    return sorted(out)


# ---------------------------------------------------------------------------
# Hensel lifting


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: f = g*h (mod m) -> (mod m**2); h monic."""
    m2 = m * m
    e = reduce(sub(f, mul(g, h)), m2)
    q, r = divmod_monic(mul(s, e), h, m2)
    g1 = reduce(add(add(g, mul(t, e)), mul(q, g)), m2)
    h1 = reduce(add(h, r), m2)
    b = reduce(sub(add(mul(s, g1), mul(t, h1)), [1]), m2)
    c, d = divmod_monic(mul(s, b), h1, m2)
    s1 = reduce(sub(s, d), m2)
    t1 = reduce(sub(sub(t, mul(t, b)), mul(c, g1)), m2)
    return g1, h1, s1, t1


def _product_mod(factors: list[ZPoly], m: int) -> ZPoly:
    out = [1]
    for fac in factors:
        out = mul_mod(out, fac, m)
    return out


def hensel_lift(f: ZPoly, factors: list[ZPoly], p: int, l: int) -> list[ZPoly]:
    """Lift f = lc(f) * prod(factors) (mod p) to monic factors mod p**l."""
    target = p ** l
    if len(factors) == 1:
        return [reduce(scale(f, pow(f[-1], -1, target)), target)]
    k = len(factors) // 2
    left, right = factors[:k], factors[k:]
    g = reduce(scale(_product_mod(left, p), f[-1]), p)
    h = _product_mod(right, p)
    _, s, t = exgcd_p(g, h, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m *= m
    g, h = reduce(g, target), reduce(h, target)
    g_monic = reduce(scale(g, pow(g[-1], -1, target)), target)
    return hensel_lift(g_monic, left, p, l) + hensel_lift(h, right, p, l)


# ---------------------------------------------------------------------------
# Zassenhaus


def _next_prime(n: int) -> int:
    def is_prime(k):
        if k < 2:
            return False
        i = 2
        while i * i <= k:
            if k % i == 0:
                return False
            i += 1
        return True

    while not is_prime(n):
        n += 1
    return n


def choose_prime(f: ZPoly) -> int:
    """Smallest prime >= 5 not dividing lc(f) and keeping f squarefree."""
    p = 5
    while True:
        if f[-1] % p and is_squarefree_p(f, p):
            return p
        p = _next_prime(p + 1)


def factor_squarefree(f: ZPoly) -> list[ZPoly]:
    """Irreducible factors over Z of a primitive squarefree f, lc > 0."""
    n = deg(f)
    if n <= 1:
        return [f]
    lc = f[-1]
    p = choose_prime(f)
    modular = factor_mod_p(f, p)
    if len(modular) == 1:
        return [f]
    bound = (math.isqrt(n + 1) + 1) * 2 ** n * max_norm(f) * lc
    l = 1
    while p ** l <= 2 * bound:
        l += 1
    modulus = p ** l
    lifted = hensel_lift(f, modular, p, l)

    found: list[ZPoly] = []
    remaining = list(range(len(lifted)))
    rest = f
    s = 1
    while 2 * s <= len(remaining):
        for subset in combinations(remaining, s):
            b = rest[-1]
            cand = symmetric(scale(_product_mod([lifted[i] for i in subset], modulus), b), modulus)
            cand = primitive(cand)
            quo = divexact(rest, cand) if cand else None
            if quo is not None:
                found.append(cand)
                rest = primitive(quo)
                remaining = [i for i in remaining if i not in subset]
                break
        else:
            s += 1
    found.append(rest)
    return found
