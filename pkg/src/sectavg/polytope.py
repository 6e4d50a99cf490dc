"""Convex polytopes in dimension 2 and 3 with exact rational coordinates."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence, Union

from . import exact as ex
from .exact import Rat
from .errors import DegenerateInput, EmptySide, NonGenericCut, ZeroDirection
from .hull import extreme_points, hull_2d, hull_3d


@dataclass(frozen=True, eq=False)
class Polytope:
    """Full-dimensional convex polytope in R^2 or R^3.

    ``vertices`` holds exact coordinates, ``edges`` index pairs ``(i, j)``
    with ``i < j``.  In 3D ``facets`` are vertex cycles ordered
    counter-clockwise seen from outside; in 2D the vertices themselves are
    listed counter-clockwise and ``facets`` is empty.

    Instances are built by the constructors of this module, which validate
    the face structure; do not create them by hand.
    """

    dim: int
    vertices: tuple
    edges: tuple
    facets: tuple = ()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_facets(self) -> int:
        return len(self.facets) if self.dim == 3 else len(self.edges)

    def edge_vector(self, k: int) -> ex.Vec:
        i, j = self.edges[k]
        return ex.sub(self.vertices[j], self.vertices[i])

    def facet_census(self) -> Counter:
        """Number of facets per vertex count, e.g. ``{3: 3, 5: 3, 6: 1}``."""
        if self.dim != 3:
            return Counter({2: len(self.edges)})
        return Counter(len(f) for f in self.facets)

    def key(self) -> frozenset:
        """Vertex set, usable for exact equality of polytopes."""
        return frozenset(self.vertices)

    def __repr__(self) -> str:
        if self.dim == 3:
            return f"Polytope(dim=3, V={self.n_vertices}, E={self.n_edges}, F={self.n_facets})"
        return f"Polytope(dim=2, V={self.n_vertices})"


PointsLike = Union[Polytope, Iterable[Sequence]]


def _points_of(obj: PointsLike) -> list[ex.Vec]:
    if isinstance(obj, Polytope):
        return list(obj.vertices)
    return [ex.vec(p) for p in obj]


def check_polytope(P: Polytope) -> None:
    """Assert the combinatorial invariants of a polytope."""
    V = P.n_vertices
    if P.dim == 2:
        assert V >= 3 and len(P.edges) == V
        for i in range(V):
            a, b, c = P.vertices[i], P.vertices[(i + 1) % V], P.vertices[(i + 2) % V]
            turn = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
            assert turn > 0, "polygon is not strictly convex and counter-clockwise"
        return
    E, F = len(P.edges), len(P.facets)
    assert V - E + F == 2, f"Euler relation fails: {V} - {E} + {F}"
    uses = Counter()
    for f in P.facets:
        for s in range(len(f)):
            a, b = f[s], f[(s + 1) % len(f)]
            uses[(min(a, b), max(a, b))] += 1
    assert set(uses) == set(P.edges), "facet boundaries and edge list disagree"
    assert all(c == 2 for c in uses.values()), "an edge is not in exactly two facets"


def _from_facets(vertices: Sequence[ex.Vec], facets: Sequence[Sequence[int]]) -> Polytope:
    used = sorted({i for f in facets for i in f})
    remap = {old: new for new, old in enumerate(used)}
    verts = tuple(vertices[i] for i in used)
    cycles = tuple(tuple(remap[i] for i in f) for f in facets)
    edges = set()
    for f in cycles:
        for s in range(len(f)):
            a, b = f[s], f[(s + 1) % len(f)]
            edges.add((min(a, b), max(a, b)))
    P = Polytope(3, verts, tuple(sorted(edges)), cycles)
    check_polytope(P)
    return P


def _from_cycle(vertices: Sequence[ex.Vec]) -> Polytope:
    n = len(vertices)
    P = Polytope(2, tuple(vertices), tuple((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))
    check_polytope(P)
    return P


def convex_hull(points: Iterable[Sequence], dim: int | None = None) -> Polytope:
    """Exact convex hull of a point set in R^2 or R^3.

    Duplicate and non-extreme points are dropped.  Raises
    :class:`DegenerateInput` when the points do not span ``dim``
    dimensions.
    """
    pts = list(dict.fromkeys(ex.vec(p) for p in points))
    if not pts:
        raise DegenerateInput("no points")
    if dim is None:
        dim = len(pts[0])
    if dim not in (2, 3) or any(len(p) != dim for p in pts):
        raise DegenerateInput(f"expected points in R^{dim}")
    ipts = ex.to_integer_points(pts)
    if ex.affine_rank(ipts) < dim:
        raise DegenerateInput(f"affine hull has dimension < {dim}")
    if dim == 2:
        return _from_cycle([pts[i] for i in hull_2d(ipts)])
    return _from_facets(pts, hull_3d(ipts))


def reduce_points(points: Iterable[Sequence]) -> list[ex.Vec]:
    """Extreme points of a possibly lower-dimensional point set."""
    pts = list(dict.fromkeys(ex.vec(p) for p in points))
    if len(pts) <= 1:
        return pts
    keep = extreme_points(ex.to_integer_points(pts))
    return [pts[i] for i in keep]


def minkowski_sum(P: PointsLike, Q: PointsLike) -> Polytope:
    """Exact Minkowski sum, by hulling all pairwise vertex sums.

    Either argument may be a :class:`Polytope` or a plain sequence of
    points (a segment, a planar polygon in R^3, a single point ...); the
    sum itself must be full-dimensional.
    """
    a, b = _points_of(P), _points_of(Q)
    if len(a[0]) != len(b[0]):
        raise DegenerateInput("summands live in different dimensions")
    return convex_hull([ex.add(p, q) for p in a for q in b])


def sum_points(P: PointsLike, Q: PointsLike) -> list[ex.Vec]:
    """Extreme points of P + Q without requiring full dimension."""
    a, b = _points_of(P), _points_of(Q)
    return reduce_points(ex.add(p, q) for p in a for q in b)


def reflect(P: Polytope) -> Polytope:
    """The polytope -P; face structure is kept, orientations stay outward."""
    verts = tuple(ex.neg(v) for v in P.vertices)
    # a point reflection preserves orientation in 2D and reverses it in 3D
    if P.dim == 2:
        return Polytope(2, verts, P.edges)
    facets = tuple(tuple(reversed(f)) for f in P.facets)
    return Polytope(3, verts, P.edges, facets)


def translate(P: Polytope, p: Sequence) -> Polytope:
    p = ex.vec(p)
    return Polytope(P.dim, tuple(ex.add(v, p) for v in P.vertices), P.edges, P.facets)


def difference_body(P: Polytope) -> Polytope:
    """P - P, a polytope symmetric about the origin."""
    return minkowski_sum(P, reflect(P))


def is_centrally_symmetric(F: Union[Polytope, Sequence[Sequence]]) -> bool:
    """True iff the vertex set equals its reflection about its centroid.

    Accepts a polytope or the vertex list of a single facet polygon.
    """
    verts = list(F.vertices) if isinstance(F, Polytope) else [ex.vec(v) for v in F]
    n = len(verts)
    c2 = tuple(Rat(2 * sum(v[k] for v in verts), n) for k in range(len(verts[0])))
    vs = set(verts)
    return all(ex.sub(c2, v) in vs for v in verts)


def facet_vertices(P: Polytope, k: int) -> list[ex.Vec]:
    return [P.vertices[i] for i in P.facets[k]]


def volume(P: Polytope) -> Rat:
    """Exact volume (area in 2D)."""
    if P.dim == 2:
        vs = P.vertices
        s = sum(vs[i][0] * vs[(i + 1) % len(vs)][1] - vs[(i + 1) % len(vs)][0] * vs[i][1] for i in range(len(vs)))
        return Rat(s, 2)
    total = Rat(0)
    for f in P.facets:
        a = P.vertices[f[0]]
        for s in range(1, len(f) - 1):
            total += ex.det3(a, P.vertices[f[s]], P.vertices[f[s + 1]])
    return total / 6


def box(lo: Sequence, hi: Sequence) -> Polytope:
    lo, hi = ex.vec(lo), ex.vec(hi)
    return convex_hull(product(*zip(lo, hi)))


def _levels(P: Polytope, z, t) -> list[Rat]:
    z = ex.vec(z)
    if ex.is_zero(z):
        raise ZeroDirection("z must be non-zero")
    t = ex.rat(t)
    return [ex.dot(z, v) - t for v in P.vertices]


def _crossing(P: Polytope, i: int, j: int, s: list) -> ex.Vec:
    a, b = P.vertices[i], P.vertices[j]
    lam = s[i] / (s[i] - s[j])
    return ex.add(a, ex.scale(lam, ex.sub(b, a)))


def cut_halfspace(P: Polytope, z: Sequence, t, side: str = "below") -> Polytope:
    """Part of P on one side of the plane ``z.x = t``.

    ``side="below"`` keeps ``z.x <= t``.  The cut must be generic: a vertex
    on the plane raises :class:`NonGenericCut`, a plane missing the
    interior raises :class:`EmptySide`.  The polytope is clipped facet by
    facet, so no hull computation is needed.
    """
    s = _levels(P, z, t)
    if any(v == 0 for v in s):
        raise NonGenericCut("a vertex lies on the cutting plane")
    if side == "above":
        s = [-v for v in s]
    elif side != "below":
        raise ValueError("side must be 'below' or 'above'")
    if all(v < 0 for v in s) or all(v > 0 for v in s):
        raise EmptySide("cutting level outside the open support interval")

    verts: list[ex.Vec] = []
    old: dict[int, int] = {}
    new: dict[tuple[int, int], int] = {}

    def keep(i):
        if i not in old:
            old[i] = len(verts)
            verts.append(P.vertices[i])
        return old[i]

    def cross_pt(i, j):
        e = (min(i, j), max(i, j))
        if e not in new:
            new[e] = len(verts)
            verts.append(_crossing(P, e[0], e[1], s))
        return new[e]

    if P.dim == 2:
        cyc = []
        n = len(P.vertices)
        for i in range(n):
            j = (i + 1) % n
            if s[i] < 0:
                cyc.append(keep(i))
            if (s[i] < 0) != (s[j] < 0):
                cyc.append(cross_pt(i, j))
        return _from_cycle([verts[k] for k in cyc])

    facets = []
    # consecutive crossing points in a clipped facet are joined by the cut
    cap_next: dict[int, int] = {}
    for f in P.facets:
        out = []
        m = len(f)
        for a in range(m):
            i, j = f[a], f[(a + 1) % m]
            if s[i] < 0:
                out.append(keep(i))
            if (s[i] < 0) != (s[j] < 0):
                out.append(cross_pt(i, j))
        if len(out) < 3:
            continue
        fresh = set(new.values())
        for a in range(len(out)):
            u, w = out[a], out[(a + 1) % len(out)]
            if u in fresh and w in fresh:
                cap_next[w] = u
        facets.append(out)
    start = next(iter(cap_next))
    cap = [start]
    while cap_next[cap[-1]] != start:
        cap.append(cap_next[cap[-1]])
    facets.append(cap)
    return _from_facets(verts, facets)


def cut_both(P: Polytope, z: Sequence, t) -> tuple[Polytope, Polytope]:
    return cut_halfspace(P, z, t, "below"), cut_halfspace(P, z, t, "above")
