"""Brute-force ground truth for Ehrhart polynomials.

Lattice points of ``lP`` are counted by scanning the bounding box column by
column: for each ``(x, y)`` the facet inequalities cut out an interval of
``z`` values.  Columns are evaluated with numpy ``int64`` when every
intermediate product provably fits, and with Python integers otherwise.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .ehrhart import EhrhartPolynomial, ehrhart_polynomial
from .errors import OracleTooLarge
from .intlinalg import Vec3
from .polytope import Polytope

DEFAULT_CELL_CAP = 10**8
_INT64_SAFE = 2**62


def default_cell_cap() -> int:
    env = os.environ.get("EHRHART3_CELL_CAP")
    return int(env) if env else DEFAULT_CELL_CAP


def contains(P: Polytope, x: Sequence[int], l: int) -> bool:
    """Whether ``x`` lies in the dilate ``lP``."""
    return all(
        f.normal[0] * x[0] + f.normal[1] * x[1] + f.normal[2] * x[2] >= l * f.offset
        for f in P.facets
    )


def _bbox(P: Polytope, l: int):
    lo = [l * min(v[k] for v in P.vertices) for k in range(3)]
    hi = [l * max(v[k] for v in P.vertices) for k in range(3)]
    return lo, hi


def count(P: Polytope, l: int, cell_cap: int | None = None) -> int:
    """``|lP ∩ Z^3|`` by bounding-box scan."""
    if l < 0:
        raise ValueError("dilation factor must be non-negative")
    cap = default_cell_cap() if cell_cap is None else cell_cap
    lo, hi = _bbox(P, l)
    ext = [hi[k] - lo[k] + 1 for k in range(3)]
    cells = ext[0] * ext[1] * ext[2]
    if cells > cap:
        raise OracleTooLarge(f"scan of {cells} cells exceeds cap {cap}")
    # scan the two shortest axes, solve for the longest one
    axis = max(range(3), key=lambda k: ext[k])
    outer = [k for k in range(3) if k != axis]
    rows = [
        (f.normal[outer[0]], f.normal[outer[1]], f.normal[axis], l * f.offset) for f in P.facets
    ]
    bound = max(abs(c) for row in rows for c in row) * 4 * max(
        max(abs(lo[k]), abs(hi[k])) for k in range(3)
    )
    if bound < _INT64_SAFE:
        return _count_numpy(rows, lo, hi, outer, axis)
    return _count_python(rows, lo, hi, outer, axis)


def _count_python(rows, lo, hi, outer, axis) -> int:
    i, j = outer
    total = 0
    for x in range(lo[i], hi[i] + 1):
        for y in range(lo[j], hi[j] + 1):
            zmin, zmax = lo[axis], hi[axis]
            for nx, ny, nz, rhs in rows:
                need = rhs - nx * x - ny * y  # nz * z >= need
                if nz > 0:
                    zmin = max(zmin, -((-need) // nz))
                elif nz < 0:
                    zmax = min(zmax, need // nz)
                elif need > 0:
                    zmax = zmin - 1
                    break
            if zmax >= zmin:
                total += zmax - zmin + 1
    return total


def _count_numpy(rows, lo, hi, outer, axis, chunk: int = 1 << 20) -> int:
    i, j = outer
    ys = np.arange(lo[j], hi[j] + 1, dtype=np.int64)
    step = max(1, chunk // len(ys))
    total = 0
    for x0 in range(lo[i], hi[i] + 1, step):
        xs = np.arange(x0, min(x0 + step, hi[i] + 1), dtype=np.int64)
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        zmin = np.full(X.shape, lo[axis], dtype=np.int64)
        zmax = np.full(X.shape, hi[axis], dtype=np.int64)
        for nx, ny, nz, rhs in rows:
            need = rhs - nx * X - ny * Y
            if nz > 0:
                np.maximum(zmin, -((-need) // nz), out=zmin)
            elif nz < 0:
                np.minimum(zmax, need // nz, out=zmax)
            else:
                zmax[need > 0] = lo[axis] - 1
        total += int(np.clip(zmax - zmin + 1, 0, None).sum())
    return total


def interpolate(n0: int, n1: int, n2: int, n3: int) -> EhrhartPolynomial:
    """The cubic through ``(l, n_l)`` for ``l = 0..3``, via forward differences."""
    d1 = n1 - n0
    d2 = n2 - 2 * n1 + n0
    d3 = n3 - 3 * n2 + 3 * n1 - n0
    # n0 + d1 l + d2 l(l-1)/2 + d3 l(l-1)(l-2)/6, expanded
    return EhrhartPolynomial(
        c0=Fraction(n0),
        c1=Fraction(d1) - Fraction(d2, 2) + Fraction(d3, 3),
        c2=Fraction(d2, 2) - Fraction(d3, 2),
        c3=Fraction(d3, 6),
    )


@dataclass(frozen=True)
class VerificationReport:
    formula: EhrhartPolynomial
    interpolated: EhrhartPolynomial
    counts: Tuple[Tuple[int, int], ...]
    deltas: Tuple[Fraction, Fraction, Fraction, Fraction]
    match: bool


def verify(
    P: Polytope,
    lmax: int = 3,
    cell_cap: int | None = None,
    formula: EhrhartPolynomial | None = None,
) -> VerificationReport:
    """Compare the formula polynomial against brute-force counts.

    Counts at ``l = 0..3`` determine the interpolant; counts for
    ``3 < l <= lmax`` must also agree with the formula for a match.
    ``formula`` may be passed to check a precomputed (or deliberately
    perturbed) polynomial.
    """
    if lmax < 3:
        raise ValueError("lmax must be at least 3")
    poly = ehrhart_polynomial(P) if formula is None else formula
    counts = tuple((l, count(P, l, cell_cap)) for l in range(lmax + 1))
    interp = interpolate(*(n for _, n in counts[:4]))
    deltas = tuple(f - g for f, g in zip(poly.coefficients, interp.coefficients))
    match = all(d == 0 for d in deltas) and all(poly(l) == n for l, n in counts)
    return VerificationReport(poly, interp, counts, deltas, match)


# -- unimodular fuzzing ----------------------------------------------------------


def fuzz_transform(seed: int, shears: int = 3, max_entry: int = 3, max_shift: int = 5):
    """Deterministic ``(U, t)``: a product of elementary shears and a shift.

    ``seed == 0`` is the identity.
    """
    U = [[int(i == j) for j in range(3)] for i in range(3)]
    t = [0, 0, 0]
    if seed == 0:
        return U, t
    rng = random.Random(seed)
    for _ in range(shears):
        i, j = rng.sample(range(3), 2)
        k = rng.choice([s for s in range(-max_entry, max_entry + 1) if s])
        # row i += k * row j
        U[i] = [U[i][c] + k * U[j][c] for c in range(3)]
    t = [rng.randint(-max_shift, max_shift) for _ in range(3)]
    return U, t


def unimodular_fuzz(points: Sequence[Sequence[int]], seed: int, **kw) -> List[Vec3]:
    """Image of ``points`` under :func:`fuzz_transform` ``(seed)``."""
    U, t = fuzz_transform(seed, **kw)
    return [
        tuple(sum(U[r][c] * p[c] for c in range(3)) + t[r] for r in range(3)) for p in points
    ]
