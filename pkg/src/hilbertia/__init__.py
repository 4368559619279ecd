"""Exact tools around Hilbert's irreducibility theorem over Q.

Polynomial types live in :mod:`hilbertia.poly`; the remaining modules cover
resultants, factorization, Kronecker specialization, Hilbert-set search,
root series and small Galois groups.
"""

__version__ = "0.1.0"
