from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ehrhart3.errors import DependentVectors, SingularSystem, ZeroVector
from ehrhart3.intlinalg import (
    add,
    content,
    cross,
    det3,
    dot,
    dual_functional,
    lattice_coords,
    minor_gcd,
    plane_lattice_basis,
    primitive,
    saturated_pair_basis,
    scale,
    xgcd,
)

coord = st.integers(-40, 40)
vec = st.tuples(coord, coord, coord)
nonzero_vec = vec.filter(lambda v: v != (0, 0, 0))
prim_vec = nonzero_vec.map(primitive)


def snf_index(v1, v2):
    """Index of Z v1 + Z v2 in its saturation: product of the invariant factors."""
    d = smith_normal_form(Matrix([list(v1), list(v2)]), domain=ZZ)
    return abs(d[0, 0] * d[1, 1])


@pytest.mark.parametrize("v, g", [((2, 4, 6), 2), ((0, 0, 0), 0), ((-15, -10, -6), 1)])
def test_content(v, g):
    assert content(v) == g


@pytest.mark.parametrize(
    "v, p",
    [((0, 0, 3), (0, 0, 1)), ((-15, -10, -6), (-15, -10, -6)), ((4, -6, 10), (2, -3, 5))],
)
def test_primitive(v, p):
    assert primitive(v) == p


def test_primitive_zero():
    with pytest.raises(ZeroVector):
        primitive((0, 0, 0))


@pytest.mark.parametrize(
    "a, b, c",
    [
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 0, 0), (0, 1, 0), (0, 1, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ],
)
def test_det3_examples(a, b, c):
    assert det3(a, b, c) == 1


@pytest.mark.parametrize(
    "v1, v2, m",
    [((1, 0, 0), (0, 1, 0), 1), ((0, 0, 1), (3, 0, -1), 3), ((0, 0, 1), (-15, -10, -6), 5)],
)
def test_minor_gcd(v1, v2, m):
    assert minor_gcd(v1, v2) == m
    assert snf_index(v1, v2) == m


def test_minor_gcd_dependent():
    with pytest.raises(DependentVectors):
        minor_gcd((1, 2, 3), (-1, -2, -3))


def test_saturated_pair_basis_examples():
    bp = saturated_pair_basis((1, 0, 0), (0, 1, 0))
    assert (bp.e2, bp.p, bp.q) == ((0, 1, 0), 0, 1)

    bp = saturated_pair_basis((0, 0, 1), (3, 0, -1))
    assert (bp.p, bp.q) == (2, 3)
    # (3, 0, -1) = 2 (0, 0, 1) + 3 (1, 0, -1)
    assert bp.e2 == (1, 0, -1)

    bp = saturated_pair_basis((0, 0, 1), (0, 1, 0))
    assert (bp.p, bp.q) == (0, 1)


def test_saturated_pair_basis_dependent():
    with pytest.raises(DependentVectors):
        saturated_pair_basis((0, 0, 1), (0, 0, -1))


@pytest.mark.parametrize(
    "v, v1, v2",
    [
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
        ((0, 0, 1), (1, 0, 0), (1, 1, 0)),
        ((1, 1, 1), (1, 0, 0), (0, 1, 0)),
    ],
)
def test_dual_functional_examples(v, v1, v2):
    assert dual_functional(v, v1, v2) == (0, 0, 1)


def test_dual_functional_singular():
    with pytest.raises(SingularSystem):
        dual_functional((1, 1, 0), (1, 0, 0), (0, 1, 0))


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert a * x + b * y == g >= 0


@given(prim_vec)
def test_plane_lattice_basis(n):
    w1, w2 = plane_lattice_basis(n)
    assert dot(w1, n) == dot(w2, n) == 0
    # cross product equal to a primitive vector means the basis is saturated
    assert cross(w1, w2) == scale(-1, n)


@given(prim_vec, prim_vec)
def test_saturated_pair_basis_properties(v1, v2):
    assume(cross(v1, v2) != (0, 0, 0))
    bp = saturated_pair_basis(v1, v2)
    assert 0 <= bp.p < bp.q
    assert bp.q == minor_gcd(v1, v2)
    if bp.q > 1:
        assert content((bp.p, bp.q, 0)) == 1
    assert add(scale(bp.p, v1), scale(bp.q, bp.e2)) == v2
    # {v1, e2} is a basis of the saturation: unit determinant in any integral basis
    w1, w2 = plane_lattice_basis(primitive(cross(v1, v2)))
    (a, b), (c, d) = lattice_coords(v1, w1, w2), lattice_coords(bp.e2, w1, w2)
    assert abs(a * d - b * c) == 1


@settings(max_examples=60, deadline=None)
@given(prim_vec, prim_vec)
def test_minor_gcd_matches_smith_form(v1, v2):
    assume(cross(v1, v2) != (0, 0, 0))
    assert minor_gcd(v1, v2) == snf_index(v1, v2)


@given(nonzero_vec, st.integers(1, 50))
def test_primitive_scale_invariant(v, k):
    assert primitive(scale(k, v)) == primitive(v)
    assert content(primitive(v)) == 1


@given(vec, vec, vec)
def test_det3_alternating(a, b, c):
    d = det3(a, b, c)
    assert det3(b, a, c) == -d
    assert det3(a, c, b) == -d
    assert det3(c, b, a) == -d


@given(vec, vec, vec)
def test_dual_functional_defining_equations(v, v1, v2):
    assume(det3(v, v1, v2) != 0)
    u = dual_functional(v, v1, v2)
    assert all(isinstance(x, Fraction) for x in u)
    assert dot(u, v) == 1
    assert dot(u, v1) == 0
    assert dot(u, v2) == 0
