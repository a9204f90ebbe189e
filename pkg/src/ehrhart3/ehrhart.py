"""Ehrhart polynomial of a 3-dimensional simple lattice polytope.

The constant, quadratic and cubic coefficients are the classical ones (1,
half the total facet lattice area, volume).  The linear coefficient is

    c1 = sum over edges (s(E) + 1/4) Vol(E)  +  1/12 sum over facets C(F)

where ``s(E)`` is the Dedekind sum of the edge's normal pair and ``C(F)`` is
a facet correction assembled from the walk coefficients ``eps, a, b`` around
the facet and symmetric tridiagonal determinants in them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .dedekind import EdgeArith, dedekind_fast, edge_dedekind
from .errors import GcdNotOne, LengthMismatch, ZeroDenominator
from .intlinalg import det3, dot, sub
from .polytope import (
    Edge,
    Facet,
    FacetWalk,
    Polytope,
    edge_rel_volume,
    facet_rel_volume,
    facet_walk,
    volume,
)

_QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class WalkCoefficients:
    eps: Tuple[int, ...]
    a: Tuple[Fraction, ...]
    b: Tuple[Fraction, ...]


@dataclass(frozen=True)
class EhrhartPolynomial:
    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __call__(self, l: int) -> Fraction:
        return ((self.c3 * l + self.c2) * l + self.c1) * l + self.c0


def _normals(P: Polytope, w: FacetWalk) -> List:
    return [P.facets[k].normal for k in w.K]


def walk_coefficients(P: Polytope, w: FacetWalk, method: str = "determinant") -> WalkCoefficients:
    """``eps_i, a_i, b_i`` for ``i = 1..r`` (stored 0-based and cyclic).

    ``method="determinant"`` uses

        a_i = det(v_{k_{i+1}}, v_{k_i}, v_{k_{i-1}}) / (eps_{i-1} eps_i)
        b_i = det(v, v_{k_{i+1}}, v_{k_{i-1}}) / (eps_{i-1} eps_i)

    and ``method="quotient"`` the edge-vector quotients

        a_i = <P_{i-1}Q_{i-1}, v_{k_{i+1}}> / (eps_i <P_{i-1}Q_{i-1}, v>)
        b_i = <P_i P_{i+1}, v_{k_{i-1}}> / (eps_{i-1} <P_i P_{i+1}, v_{k_i}>).

    Both give the same values; tests cross-check them.
    """
    r, v = w.r, w.v
    vk = _normals(P, w)
    eps = tuple(det3(v, vk[(i + 1) % r], vk[i]) for i in range(r))
    if any(e == 0 for e in eps):
        raise ZeroDenominator(f"vanishing epsilon in {eps}")
    a: List[Fraction] = []
    b: List[Fraction] = []
    if method == "determinant":
        for i in range(r):
            nxt, prev = vk[(i + 1) % r], vk[i - 1]
            den = eps[i - 1] * eps[i]
            a.append(Fraction(det3(nxt, vk[i], prev), den))
            b.append(Fraction(det3(v, nxt, prev), den))
    elif method == "quotient":
        X = P.vertices
        for i in range(r):
            pq = sub(X[w.Q[i - 1]], X[w.P[i - 1]])
            pp = sub(X[w.P[(i + 1) % r]], X[w.P[i]])
            da = eps[i] * dot(pq, v)
            db = eps[i - 1] * dot(pp, vk[i])
            if da == 0 or db == 0:
                raise ZeroDenominator(f"facet {w.facet}, index {i + 1}")
            a.append(Fraction(dot(pq, vk[(i + 1) % r]), da))
            b.append(Fraction(dot(pp, vk[i - 1]), db))
    else:
        raise ValueError(f"unknown method {method!r}")
    return WalkCoefficients(eps=eps, a=tuple(a), b=tuple(b))


def tridiag_det(b_slice: Sequence, eps_slice: Sequence) -> Fraction:
    """Determinant of the symmetric tridiagonal matrix with diagonal
    ``b_slice`` and off-diagonal ``1/eps`` for ``eps`` in ``eps_slice``.

    The empty matrix has determinant 1.
    """
    L = len(b_slice)
    if len(eps_slice) != max(L - 1, 0):
        raise LengthMismatch(f"{L} diagonal entries need {max(L - 1, 0)} off-diagonal, got {len(eps_slice)}")
    d_prev, d = Fraction(1), Fraction(1)  # D of sizes -1 and 0
    for t in range(L):
        off = Fraction(1, eps_slice[t - 1]) ** 2 if t else Fraction(0)
        d_prev, d = d, b_slice[t] * d - off * d_prev
    return d


def _edge_data(P: Polytope, e: Edge) -> Tuple[int, EdgeArith]:
    f1, f2 = e.facets
    return edge_rel_volume(P, e), edge_dedekind(P.facets[f1].normal, P.facets[f2].normal)


def facet_correction(P: Polytope, f: Facet, start: int = 0, walk: Optional[FacetWalk] = None) -> Fraction:
    """``C(F)``; ``start`` rotates the walk so a different neighbour is F_{k_1}.

        C(F) = - sum_{2 <= i < j <= r} a_i D(i+1, j-1) eps_i ... eps_{j-1}
                                         * Vol(P_{j-1}P_j) / m(P_{j-1}P_j)
    """
    w = (walk or facet_walk(P, f)).rotated(start)
    r = w.r
    wc = walk_coefficients(P, w)
    # 1-based accessors matching the index conventions above
    a = lambda i: wc.a[i - 1]  # noqa: E731
    b = lambda i: wc.b[i - 1]  # noqa: E731
    eps = lambda i: wc.eps[i - 1]  # noqa: E731

    total = Fraction(0)
    for j in range(3, r + 1):
        e = P.edge_between(w.P[j - 2], w.P[j - 1])
        vol, arith = _edge_data(P, e)
        weight = Fraction(vol, arith.m)
        # D(i+1, j-1) for i = j-1 down to 2, grown one row at a time at the front
        d_next, d_cur = Fraction(0), Fraction(1)  # D(j+1, j-1) unused, D(j, j-1) = 1
        eps_prod = 1
        inner = Fraction(0)
        for i in range(j - 1, 1, -1):
            eps_prod *= eps(i)
            if i < j - 1:
                # D(i+1, j-1) = b_{i+1} D(i+2, j-1) - eps_{i+1}^{-2} D(i+3, j-1)
                d_next, d_cur = d_cur, b(i + 1) * d_cur - Fraction(1, eps(i + 1) ** 2) * d_next
            inner += a(i) * d_cur * eps_prod
        total += inner * weight
    return -total


def edge_term(P: Polytope, e: Edge) -> Fraction:
    """``(s(E) + 1/4) Vol(E)``."""
    vol, arith = _edge_data(P, e)
    return (arith.s + _QUARTER) * vol


def c1(P: Polytope) -> Fraction:
    edges = sum((edge_term(P, e) for e in P.edges), Fraction(0))
    facets = sum((facet_correction(P, f) for f in P.facets), Fraction(0))
    return edges + facets / 12


def ehrhart_polynomial(P: Polytope) -> EhrhartPolynomial:
    c2 = sum((facet_rel_volume(P, f) for f in P.facets), Fraction(0)) / 2
    return EhrhartPolynomial(c0=Fraction(1), c1=c1(P), c2=c2, c3=volume(P))


@dataclass(frozen=True)
class EdgeRow:
    endpoints: Tuple[Tuple[int, int, int], Tuple[int, int, int]]
    vol: int
    m: int
    s: Fraction


@dataclass(frozen=True)
class FacetRow:
    normal: Tuple[int, int, int]
    relative_volume: Fraction
    correction: Fraction


def breakdown(P: Polytope) -> Tuple[List[EdgeRow], List[FacetRow]]:
    """Per-edge ``(Vol, m, s)`` and per-facet ``(normal, area, C)`` rows."""
    edges = []
    for e in P.edges:
        vol, arith = _edge_data(P, e)
        u, w = e.endpoints
        edges.append(EdgeRow((P.vertices[u], P.vertices[w]), vol, arith.m, arith.s))
    facets = [FacetRow(f.normal, facet_rel_volume(P, f), facet_correction(P, f)) for f in P.facets]
    return edges, facets


# -- closed forms for the two example families ---------------------------------


def closed_form_tetra_c1(a: int, b: int, c: int) -> Fraction:
    """c1 of the tetrahedron ``conv(0, a e1, b e2, c e3)`` by its explicit
    Dedekind-sum formula; requires ``gcd(a, b, c) == 1``."""
    if min(a, b, c) < 1:
        raise ValueError("a, b, c must be positive")
    if gcd(gcd(a, b), c) != 1:
        raise GcdNotOne(f"gcd({a}, {b}, {c}) != 1")
    A, B, C = gcd(b, c), gcd(a, c), gcd(a, b)
    d = A * B * C
    total = Fraction(a + b + c, 4)
    total += (_QUARTER - dedekind_fast(a * b // d, c * C // d)) * C
    total += (_QUARTER - dedekind_fast(a * c // d, b * B // d)) * B
    total += (_QUARTER - dedekind_fast(b * c // d, a * A // d)) * A
    total += (Fraction(a * b, c) + Fraction(a * c, b) + Fraction(b * c, a) + Fraction(d * d, a * b * c)) / 12
    return total


def closed_form_prism_c1(a: int, b: int, c: int) -> Fraction:
    """c1 of the slanted prism family: ``3a/2 + gcd(b, c)``."""
    if a < 1 or c < 1 or b < 0:
        raise ValueError("need a, c >= 1 and b >= 0")
    return Fraction(3 * a, 2) + gcd(b, c)
