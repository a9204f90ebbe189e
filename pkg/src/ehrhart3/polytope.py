"""Face structure of 3-dimensional simple lattice polytopes.

:func:`build` runs an exact gift-wrapping hull over integer points and
returns an immutable :class:`Polytope` whose facets carry primitive inward
normals and cyclically ordered boundary vertices.  All predicates are
integer determinants, so the combinatorics are exact.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import (
    NonVertexInput,
    NotFullDimensional,
    NotSimple,
    OrientationFailure,
    TooFewPoints,
    VertexNotOnFacet,
)
from .intlinalg import (
    Vec3,
    content,
    cross,
    det3,
    dot,
    lattice_coords,
    plane_lattice_basis,
    primitive,
    scale,
    sub,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Facet:
    """A facet ``{x : <x, normal> = offset}``; the polytope is ``>= offset``."""

    normal: Vec3
    offset: int
    cycle: Tuple[int, ...]


@dataclass(frozen=True)
class Edge:
    endpoints: Tuple[int, int]
    facets: Tuple[int, int]


@dataclass(frozen=True)
class Polytope:
    vertices: Tuple[Vec3, ...]
    facets: Tuple[Facet, ...]
    edges: Tuple[Edge, ...]
    vertex_facets: Tuple[Tuple[int, int, int], ...]
    _edge_index: Dict[FrozenSet[int], int] = field(repr=False, compare=False, default_factory=dict)
    _neighbors: Tuple[Tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    def edge_between(self, u: int, w: int) -> Edge:
        return self.edges[self._edge_index[frozenset((u, w))]]

    def neighbors(self, vid: int) -> Tuple[int, ...]:
        return self._neighbors[vid]


@dataclass(frozen=True)
class FacetWalk:
    """Vertices and neighbouring facets around one facet.

    ``K[i]`` is the facet across the boundary edge ``(P[i-1], P[i])`` and
    ``Q[i]`` is the neighbour of ``P[i]`` off the facet; indices are cyclic.
    """

    facet: int
    v: Vec3
    r: int
    P: Tuple[int, ...]
    K: Tuple[int, ...]
    Q: Tuple[int, ...]

    def rotated(self, shift: int) -> "FacetWalk":
        """The same walk started at index ``shift``."""
        s = shift % self.r

        def rot(seq):
            return tuple(seq[s:]) + tuple(seq[:s])

        return FacetWalk(self.facet, self.v, self.r, rot(self.P), rot(self.K), rot(self.Q))


# -- hull -------------------------------------------------------------------


def _hull_2d(pts: Sequence[Tuple[int, int]]) -> List[int]:
    """Indices of the strict convex hull vertices, counterclockwise."""
    order = sorted(range(len(pts)), key=lambda i: pts[i])

    def turn(o, a, b):
        return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) - (
            pts[a][1] - pts[o][1]
        ) * (pts[b][0] - pts[o][0])

    lower: List[int] = []
    for i in order:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: List[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def _facet_cycle(points: Sequence[Vec3], on_plane: Sequence[int], n: Vec3) -> Tuple[int, ...]:
    """Boundary vertices of a planar point set, counterclockwise seen
    against the inward normal ``n`` (``<(b-a) x (c-a), n> > 0``)."""
    w1, w2 = plane_lattice_basis(n)
    base = points[on_plane[0]]
    coords = [lattice_coords(sub(points[i], base), w1, w2) for i in on_plane]
    hull = [on_plane[i] for i in _hull_2d(coords)]
    # cross(w1, w2) == -n, so 2D counterclockwise is clockwise against n.
    hull.reverse()
    return tuple(hull)


def _initial_facet(points: Sequence[Vec3]) -> Tuple[Vec3, int]:
    """Some supporting plane containing three affinely independent points."""
    n_pts = len(points)
    for i in range(n_pts):
        for j in range(i + 1, n_pts):
            for k in range(j + 1, n_pts):
                c = cross(sub(points[j], points[i]), sub(points[k], points[i]))
                if c == (0, 0, 0):
                    continue
                nrm = primitive(c)
                off = dot(nrm, points[i])
                vals = [dot(nrm, x) - off for x in points]
                if all(v >= 0 for v in vals):
                    return nrm, off
                if all(v <= 0 for v in vals):
                    return scale(-1, nrm), -off
    raise NotFullDimensional("no supporting plane found")


def _check_full_dimensional(points: Sequence[Vec3]) -> None:
    o = points[0]
    diffs = [sub(x, o) for x in points[1:]]
    for i, a in enumerate(diffs):
        for j in range(i + 1, len(diffs)):
            c = cross(a, diffs[j])
            if c == (0, 0, 0):
                continue
            if any(dot(c, d) != 0 for d in diffs):
                return
    raise NotFullDimensional("all points lie in a common plane")


def _gift_wrap(points: Sequence[Vec3]) -> List[Tuple[Vec3, int, Tuple[int, ...]]]:
    """Facets ``(normal, offset, cycle)`` of the convex hull of ``points``."""
    n0, off0 = _initial_facet(points)
    planes: Dict[Tuple[Vec3, int], Tuple[int, ...]] = {}
    queue = deque([(n0, off0)])
    while queue:
        nrm, off = queue.popleft()
        if (nrm, off) in planes:
            continue
        on_plane = [i for i, x in enumerate(points) if dot(nrm, x) == off]
        cycle = _facet_cycle(points, on_plane, nrm)
        planes[(nrm, off)] = cycle
        off_plane = [i for i, x in enumerate(points) if dot(nrm, x) != off]
        for t in range(len(cycle)):
            a, b = points[cycle[t]], points[cycle[(t + 1) % len(cycle)]]
            ab = sub(b, a)
            # Rotate a plane about the edge ab, away from the current facet,
            # until every point lies on its inner side.
            c = points[off_plane[0]]
            for i in off_plane[1:]:
                if det3(ab, sub(c, a), sub(points[i], a)) > 0:
                    c = points[i]
            new_n = primitive(scale(-1, cross(ab, sub(c, a))))
            new_off = dot(new_n, a)
            if (new_n, new_off) not in planes:
                queue.append((new_n, new_off))
    out = []
    for (nrm, off), cycle in planes.items():
        assert all(dot(nrm, x) >= off for x in points), "hull facet is not supporting"
        out.append((nrm, off, cycle))
    return out


def _canonical_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    s = cycle.index(min(cycle))
    return tuple(cycle[s:]) + tuple(cycle[:s])


def build(points: Iterable[Sequence[int]], allow_interior: bool = False) -> Polytope:
    """Convex hull and face structure of integer ``points``.

    Duplicates are removed.  Input points that are not hull vertices raise
    :class:`NonVertexInput`, unless ``allow_interior`` is set, in which case
    they are dropped with a warning.  Vertex ids follow input order.
    """
    pts: List[Vec3] = []
    seen = set()
    for p in points:
        t = tuple(p)
        if len(t) != 3 or not all(isinstance(x, int) and not isinstance(x, bool) for x in t):
            raise TypeError(f"expected an integer triple, got {p!r}")
        if t not in seen:
            seen.add(t)
            pts.append(t)
    if len(pts) < 4:
        raise TooFewPoints(f"need at least 4 distinct points, got {len(pts)}")
    _check_full_dimensional(pts)

    raw = _gift_wrap(pts)
    used = sorted({i for _, _, cyc in raw for i in cyc})
    if len(used) != len(pts):
        extra = [pts[i] for i in range(len(pts)) if i not in set(used)]
        if not allow_interior:
            raise NonVertexInput(f"points are not vertices of the hull: {extra}")
        log.warning("dropping %d non-vertex input point(s): %s", len(extra), extra)
    renum = {old: new for new, old in enumerate(used)}
    vertices = tuple(pts[i] for i in used)

    facets = sorted(
        (
            Facet(normal=nrm, offset=off, cycle=_canonical_cycle([renum[i] for i in cyc]))
            for nrm, off, cyc in raw
        ),
        key=lambda f: (f.cycle, f.normal),
    )

    vf: List[List[int]] = [[] for _ in vertices]
    for fi, f in enumerate(facets):
        for vid in f.cycle:
            vf[vid].append(fi)
    for vid, fs in enumerate(vf):
        if len(fs) != 3:
            raise NotSimple(f"vertex {vertices[vid]} lies on {len(fs)} facets")

    edge_facets: Dict[Tuple[int, int], List[int]] = {}
    for fi, f in enumerate(facets):
        r = len(f.cycle)
        for t in range(r):
            u, w = f.cycle[t], f.cycle[(t + 1) % r]
            edge_facets.setdefault((min(u, w), max(u, w)), []).append(fi)
    edges = []
    for key in sorted(edge_facets):
        fs = edge_facets[key]
        assert len(fs) == 2, f"edge {key} has {len(fs)} incident facets"
        edges.append(Edge(endpoints=key, facets=(fs[0], fs[1])))
    edge_index = {frozenset(e.endpoints): i for i, e in enumerate(edges)}
    nbrs: List[List[int]] = [[] for _ in vertices]
    for e in edges:
        u, w = e.endpoints
        nbrs[u].append(w)
        nbrs[w].append(u)

    return Polytope(
        vertices=vertices,
        facets=tuple(facets),
        edges=tuple(edges),
        vertex_facets=tuple(tuple(fs) for fs in vf),
        _edge_index=edge_index,
        _neighbors=tuple(tuple(sorted(n)) for n in nbrs),
    )


# -- measures ----------------------------------------------------------------


def edge_rel_volume(P: Polytope, e: Edge) -> int:
    """Lattice length of an edge."""
    u, w = e.endpoints
    return content(sub(P.vertices[w], P.vertices[u]))


def facet_rel_volume(P: Polytope, f: Facet) -> Fraction:
    """Area of a facet in units of the fundamental domain of its plane lattice."""
    w1, w2 = plane_lattice_basis(f.normal)
    base = P.vertices[f.cycle[0]]
    xy = [lattice_coords(sub(P.vertices[i], base), w1, w2) for i in f.cycle]
    twice = 0
    for t in range(len(xy)):
        (x0, y0), (x1, y1) = xy[t], xy[(t + 1) % len(xy)]
        twice += x0 * y1 - x1 * y0
    return Fraction(abs(twice), 2)


def volume(P: Polytope) -> Fraction:
    """Euclidean volume, by coning facet fans from vertex 0."""
    ref = P.vertices[0]
    six = 0
    for f in P.facets:
        a = sub(P.vertices[f.cycle[0]], ref)
        for t in range(1, len(f.cycle) - 1):
            b = sub(P.vertices[f.cycle[t]], ref)
            c = sub(P.vertices[f.cycle[t + 1]], ref)
            # cycles run counterclockwise against the inward normal
            six -= det3(a, b, c)
    assert six > 0
    return Fraction(six, 6)


# -- facet walks ---------------------------------------------------------------


def off_facet_neighbor(P: Polytope, f: Facet, vid: int) -> int:
    """The neighbour of ``vid`` along the unique edge at ``vid`` leaving ``f``."""
    if vid not in f.cycle:
        raise VertexNotOnFacet(f"vertex {vid} is not on facet {f.cycle}")
    on = set(f.cycle)
    out = [w for w in P.neighbors(vid) if w not in on]
    assert len(out) == 1
    return out[0]


def _other_facet(P: Polytope, fid: int, u: int, w: int) -> int:
    a, b = P.edge_between(u, w).facets
    return b if a == fid else a


def facet_walk(P: Polytope, f: Facet) -> FacetWalk:
    """Walk around ``f`` in the direction that makes every epsilon positive."""
    fid = P.facets.index(f)
    v = f.normal
    for cyc in (f.cycle, (f.cycle[0],) + tuple(reversed(f.cycle[1:]))):
        r = len(cyc)
        K = tuple(_other_facet(P, fid, cyc[i - 1], cyc[i]) for i in range(r))
        eps = [
            det3(v, P.facets[K[(i + 1) % r]].normal, P.facets[K[i]].normal) for i in range(r)
        ]
        if eps[0] > 0:
            if not all(e > 0 for e in eps):
                raise OrientationFailure(f"facet {fid}: epsilons {eps}")
            Q = tuple(off_facet_neighbor(P, f, p) for p in cyc)
            return FacetWalk(facet=fid, v=v, r=r, P=tuple(cyc), K=K, Q=Q)
    raise OrientationFailure(f"facet {fid}: no direction gives a positive epsilon")
