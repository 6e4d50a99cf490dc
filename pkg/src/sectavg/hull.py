"""Exact convex hulls in two and three dimensions.

All routines take points with integer coordinates (use
:func:`sectavg.exact.to_integer_points` first) and return index structures
into the input list.  Points must be pairwise distinct.

The 3D hull is computed facet by facet with gift wrapping: starting from
one facet, the plane through each boundary edge is rotated about the edge
until it supports the point set.  Every supporting plane collects *all*
points lying on it, so coplanar pieces never appear and facets come out
maximal without a merge pass.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import DegenerateInput
from .exact import affine_rank, primitive

IntPoint = tuple  # tuple[int, ...]


def _sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points: Sequence[IntPoint], idx: Sequence[int] | None = None) -> list[int]:
    """Counter-clockwise cycle of the strictly convex vertices (monotone chain).

    Collinear boundary points are dropped.  ``idx`` restricts the
    computation to a subset and the returned indices refer to ``points``.
    """
    if idx is None:
        idx = range(len(points))
    order = sorted(idx, key=lambda i: (points[i][0], points[i][1]))
    if len(order) < 3:
        return list(order)
    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and _turn(points[lower[-2]], points[lower[-1]], points[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and _turn(points[upper[-2]], points[upper[-1]], points[i]) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def planar_cycle(points: Sequence[IntPoint], idx: Sequence[int], normal: IntPoint) -> list[int]:
    """Convex cycle of coplanar 3D points, counter-clockwise seen from ``normal``."""
    k = max(range(3), key=lambda c: abs(normal[c]))
    i, j = (k + 1) % 3, (k + 2) % 3
    proj = {p: (points[p][i], points[p][j]) for p in idx}
    keys = list(idx)
    flat = [proj[p] for p in keys]
    cyc = [keys[c] for c in hull_2d(flat)]
    # projecting along axis k keeps orientation iff normal[k] > 0
    if normal[k] < 0:
        cyc.reverse()
    return cyc


def _rotate_about(points, a, u, n_out):
    """Rotate a supporting plane about the line ``a + s*u`` until it hits the set.

    ``n_out`` is an outward normal of a plane through the line that has all
    points on its non-positive side.  Points are ordered by their angle
    about the line, measured from the half-plane in direction
    ``n_out x u`` towards the inside; the maximiser spans the new plane.
    Returns the outward primitive normal of that plane.
    """
    d = _cross(n_out, u)
    best = None
    ba = bb = 0
    for p in points:
        w = _sub(p, a)
        beta = -_dot(w, n_out)
        alpha = _dot(w, d)
        if beta == 0 and alpha == 0:
            continue
        if best is None or ba * beta - bb * alpha > 0:
            best, ba, bb = p, alpha, beta
    if best is None:
        raise DegenerateInput("all points lie on one line")
    normal = _cross(u, _sub(best, a))
    for p in points:
        s = _dot(normal, _sub(p, a))
        if s > 0:
            normal = (-normal[0], -normal[1], -normal[2])
            break
        if s < 0:
            break
    return primitive(normal)


def hull_3d(points: Sequence[IntPoint]) -> list[list[int]]:
    """Facets of the convex hull of distinct integer 3D points.

    Each facet is a cycle of point indices, counter-clockwise when viewed
    from outside.  Raises :class:`DegenerateInput` for flat input.
    """
    n = len(points)
    if n < 4 or affine_rank(points) < 3:
        raise DegenerateInput("points do not span three dimensions")
    pts = [tuple(p) for p in points]

    def plane_facet(normal, anchor):
        off = _dot(normal, anchor)
        on = [i for i in range(n) if _dot(normal, pts[i]) == off]
        return (normal, off), on

    # first supporting plane: through the lexicographic minimum, parallel to x3
    i0 = min(range(n), key=lambda i: pts[i])
    p0 = pts[i0]
    normal = _rotate_about(pts, p0, (0, 0, 1), (-1, 0, 0))
    key, on = plane_facet(normal, p0)
    if affine_rank([pts[i] for i in on]) < 2:
        # contact is an edge through p0; wrap once more about it
        far = max(on, key=lambda i: pts[i])
        normal = _rotate_about(pts, p0, _sub(pts[far], p0), normal)
        key, on = plane_facet(normal, p0)

    facets: dict[tuple, list[int]] = {}
    owner: dict[tuple[int, int], tuple] = {}
    queue: deque = deque()

    def register(key, on):
        cyc = planar_cycle(pts, on, key[0])
        facets[key] = cyc
        for s in range(len(cyc)):
            e = (cyc[s], cyc[(s + 1) % len(cyc)])
            if e in owner:
                raise AssertionError("directed edge claimed by two facets")
            owner[e] = key
        queue.append(key)

    register(key, on)
    while queue:
        key = queue.popleft()
        cyc = facets[key]
        for s in range(len(cyc)):
            a, b = cyc[s], cyc[(s + 1) % len(cyc)]
            if (b, a) in owner:
                continue
            nrm = _rotate_about(pts, pts[a], _sub(pts[b], pts[a]), key[0])
            k2, on2 = plane_facet(nrm, pts[a])
            if k2 in facets:
                raise AssertionError("wrapped onto a known facet without its edge")
            register(k2, on2)
            if (b, a) not in owner:
                raise AssertionError("adjacent facet does not contain the pivot edge")
    return list(facets.values())


def extreme_points(points: Sequence[IntPoint]) -> list[int]:
    """Indices of the extreme points of a set of any affine dimension (2D or 3D ambient)."""
    n = len(points)
    if n <= 1:
        return list(range(n))
    r = affine_rank(points)
    if r == 1:
        lo = min(range(n), key=lambda i: points[i])
        hi = max(range(n), key=lambda i: points[i])
        return [lo, hi]
    dim = len(points[0])
    if dim == 2:
        return hull_2d(points)
    if r == 2:
        p0 = points[0]
        normal = None
        for p in points[1:]:
            for q in points[1:]:
                c = _cross(_sub(p, p0), _sub(q, p0))
                if c != (0, 0, 0):
                    normal = c
                    break
            if normal:
                break
        return planar_cycle(points, range(n), normal)
    verts = {i for f in hull_3d(points) for i in f}
    return sorted(verts)
