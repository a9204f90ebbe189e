"""Vertex lists of the built-in example families."""

import itertools
from math import gcd


def tetra_points(a: int, b: int, c: int):
    """Corner tetrahedron ``conv(0, a e1, b e2, c e3)``; needs gcd(a, b, c) = 1."""
    if min(a, b, c) < 1 or gcd(gcd(a, b), c) != 1:
        raise ValueError("tetra needs positive A B C with gcd(A, B, C) = 1")
    return [(0, 0, 0), (a, 0, 0), (0, b, 0), (0, 0, c)]


def prism_points(a: int, b: int, c: int):
    """Triangle ``conv(0, a e1, a e2)`` swept along ``(b, 0, c)``."""
    if a < 1 or c < 1 or b < 0:
        raise ValueError("prism needs A, C >= 1 and B >= 0")
    return [(0, 0, 0), (a, 0, 0), (0, a, 0), (b, 0, c), (a + b, 0, c), (b, a, c)]


def cube_points(n: int):
    if n < 1:
        raise ValueError("cube needs N >= 1")
    return list(itertools.product((0, n), repeat=3))
