"""Exact integer linear algebra in Z^3.

Vectors are plain ``tuple[int, int, int]``; rationals are
:class:`fractions.Fraction`.  Python integers are unbounded, so nothing here
can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple

from .errors import DependentVectors, SingularSystem, ZeroVector

Vec3 = Tuple[int, int, int]
RationalVec3 = Tuple[Fraction, Fraction, Fraction]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def add(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale(k, v):
    return (k * v[0], k * v[1], k * v[2])


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def content(v: Vec3) -> int:
    """gcd of the coordinates; ``content((0, 0, 0)) == 0``."""
    return gcd(gcd(v[0], v[1]), v[2])


def primitive(v: Vec3) -> Vec3:
    """Divide ``v`` by its content, keeping its direction."""
    g = content(v)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive direction")
    return (v[0] // g, v[1] // g, v[2] // g)


def det3(a: Vec3, b: Vec3, c: Vec3) -> int:
    """Determinant of the 3x3 matrix with columns ``a, b, c``."""
    return dot(a, cross(b, c))


def minor_gcd(v1: Vec3, v2: Vec3) -> int:
    """Index of ``Z v1 + Z v2`` in its saturation ``(R v1 + R v2) ∩ Z^3``.

    This is the gcd of the 2x2 minors of the matrix with rows ``v1, v2``.
    """
    m = content(cross(v1, v2))
    if m == 0:
        raise DependentVectors(f"{v1} and {v2} are parallel")
    return m


def plane_lattice_basis(n: Vec3) -> Tuple[Vec3, Vec3]:
    """Integral basis ``(w1, w2)`` of ``{w in Z^3 : <w, n> = 0}``.

    ``n`` must be primitive.  The basis satisfies ``cross(w1, w2) == -n``.
    """
    a, b, c = n
    g, x0, y0 = xgcd(a, b)
    if g == 0:
        # n = (0, 0, ±1)
        return (c, 0, 0), (0, -1, 0)
    w1 = (b // g, -a // g, 0)
    w2 = (-c * x0, -c * y0, g)
    return w1, w2


def lattice_coords(x: Vec3, w1: Vec3, w2: Vec3) -> Tuple[int, int]:
    """Integer coordinates of ``x`` in the plane basis ``w1, w2``.

    ``x`` must lie in the lattice spanned by ``w1, w2`` (a saturated
    rank-2 lattice); Cramer's rule with the normal ``w1 x w2`` gives the
    coordinates, and the division is asserted to be exact.
    """
    n = cross(w1, w2)
    d = dot(n, n)
    alpha, ra = divmod(det3(x, w2, n), d)
    beta, rb = divmod(det3(w1, x, n), d)
    if ra or rb or dot(x, n) != 0:
        raise ValueError(f"{x} is not in the lattice spanned by {w1}, {w2}")
    return alpha, beta


@dataclass(frozen=True)
class BasisPair:
    """``v2 == p*v1 + q*e2`` with ``{v1, e2}`` a basis of the saturation."""

    e2: Vec3
    p: int
    q: int


def saturated_pair_basis(v1: Vec3, v2: Vec3) -> BasisPair:
    """Extend primitive ``v1`` to a basis ``{v1, e2}`` of the saturated plane
    lattice through ``v1, v2`` and write ``v2 = p*v1 + q*e2`` with
    ``0 <= p < q``.
    """
    if content(v1) != 1 or content(v2) != 1:
        raise ValueError("saturated_pair_basis expects primitive vectors")
    minor_gcd(v1, v2)  # raises DependentVectors
    n = primitive(cross(v1, v2))
    w1, w2 = plane_lattice_basis(n)
    al, be = lattice_coords(v1, w1, w2)
    ga, de = lattice_coords(v2, w1, w2)
    g, x, y = xgcd(al, be)
    assert g == 1, "primitive vector has non-unit lattice content"
    # e has 2D coordinates (-y, x); det[[al, be], [-y, x]] == 1
    e = add(scale(-y, w1), scale(x, w2))
    q = al * de - be * ga
    p = ga * x + de * y
    if q < 0:
        q = -q
        e = scale(-1, e)
    p_red = p % q
    e2 = add(e, scale((p - p_red) // q, v1))
    assert add(scale(p_red, v1), scale(q, e2)) == tuple(v2)
    return BasisPair(e2=e2, p=p_red, q=q)


def dual_functional(v: Vec3, v1: Vec3, v2: Vec3) -> RationalVec3:
    """Solve ``<u, v> = 1, <u, v1> = 0, <u, v2> = 0`` exactly.

    By Cramer's rule ``u = (v1 x v2) / det(v, v1, v2)``.
    """
    d = det3(v, v1, v2)
    if d == 0:
        raise SingularSystem(f"det({v}, {v1}, {v2}) == 0")
    c = cross(v1, v2)
    return (Fraction(c[0], d), Fraction(c[1], d), Fraction(c[2], d))
