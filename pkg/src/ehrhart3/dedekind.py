"""Dedekind sums and the per-edge arithmetic data ``(m(E), s(E))``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .errors import InvalidModulus, NotCoprime
from .intlinalg import Vec3, minor_gcd, saturated_pair_basis

_HALF = Fraction(1, 2)


def sawtooth(x) -> Fraction:
    """``((x))``: ``x - floor(x) - 1/2`` off the integers, ``0`` on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - _HALF


def dedekind_direct(p: int, q: int) -> Fraction:
    """``s(p, q) = sum_{i=1}^{q} ((i/q)) ((p i/q))``, term by term."""
    if q < 1:
        raise InvalidModulus(f"modulus must be >= 1, got {q}")
    # ((k/q)) = (2 (k mod q) - q) / (2q) when q does not divide k; terms are
    # accumulated over the common denominator 4 q^2.
    num = 0
    for i in range(1, q):
        r = p * i % q
        if r:
            num += (2 * i - q) * (2 * r - q)
    return Fraction(num, 4 * q * q)


def dedekind_fast(p: int, q: int) -> Fraction:
    """Dedekind sum via the reciprocity law, O(log q) steps.

    Uses ``s(p, q) + s(q, p) = -1/4 + (p/q + q/p + 1/(p q)) / 12`` for
    coprime ``p, q >= 1`` together with ``s(p, q) = s(p mod q, q)``.
    """
    if q < 1:
        raise InvalidModulus(f"modulus must be >= 1, got {q}")
    p %= q
    if p == 0 or q == 1:
        return Fraction(0)
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    total = Fraction(0)
    sign = 1
    while p != 0 and q != 1:
        # s(p, q) = -1/4 + (p/q + q/p + 1/(pq))/12 - s(q mod p, p)
        total += sign * (Fraction(-1, 4) + Fraction(p * p + q * q + 1, 12 * p * q))
        sign = -sign
        p, q = q % p, p
    return total


@dataclass(frozen=True)
class EdgeArith:
    """Lattice index ``m`` and Dedekind sum ``s`` attached to an edge."""

    m: int
    s: Fraction


def edge_dedekind(v1: Vec3, v2: Vec3) -> EdgeArith:
    """``(m(E), s(E))`` for the edge whose two facets have normals v1, v2."""
    m = minor_gcd(v1, v2)
    basis = saturated_pair_basis(v1, v2)
    assert basis.q == m
    return EdgeArith(m=m, s=dedekind_fast(basis.p, basis.q))
