"""Built-in polytopes and generator sets.

Coordinates are exact and frozen.  Where only a qualitative recipe is
available (two quadrilaterals in non-parallel planes, perturbed regular
polygons, points in general position ...) the construction below fixes one
concrete rational instance and checks the structural conditions it relies
on, raising if they ever fail.

Polygon sums ``Q1 + Q2`` use Q1 in the plane x3 = 0 and Q2 in the plane
x1 = 0.  For such a sum every edge of Q1 is repeated once per vertex of Q2
on one side of the two vertices of Q2 extremal in x3; when those two
vertices are opposite in the cyclic order of a 2k-gon, every edge class has
k + 1 members.  The builders enforce that "opposite extremes" condition.
"""
from __future__ import annotations

import math
from itertools import combinations, product
from typing import Sequence

import numpy as np

from . import exact as ex
from .exact import Rat
from .errors import UnknownExample
from .polytope import Polytope, convex_hull, minkowski_sum
from .zonotope import GeneratorSet, coplanarity_hypergraph


def cube() -> Polytope:
    return convex_hull(product((0, 1), repeat=3))


def tetrahedron() -> Polytope:
    return convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def square() -> Polytope:
    return convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])


def parallelogram() -> Polytope:
    return convex_hull([(0, 0), (3, 1), (4, 3), (1, 2)])


def generic_zonotope(n: int = 4, seed: int = 0, bound: int = 20) -> GeneratorSet:
    """``n`` random integer generators, no three linearly dependent."""
    rng = np.random.default_rng(seed)
    while True:
        gens = [tuple(int(c) for c in rng.integers(-bound, bound + 1, size=3)) for _ in range(n)]
        if all(ex.det3(*t) != 0 for t in combinations(gens, 3)):
            return GeneratorSet.of(gens)


def _cyclic_ok(poly2d: Sequence[Sequence[int]], extreme_axis: int) -> bool:
    """Strictly convex CCW, no parallel sides, extremes along an axis opposite."""
    m = len(poly2d)
    edges = [ex.sub(poly2d[(i + 1) % m], poly2d[i]) for i in range(m)]
    for i in range(m):
        a, b = edges[i], edges[(i + 1) % m]
        if a[0] * b[1] - a[1] * b[0] <= 0:
            return False
    for a, b in combinations(edges, 2):
        if a[0] * b[1] - a[1] * b[0] == 0:
            return False
    # no side orthogonal to the other plane's normal
    if any(e[extreme_axis] == 0 for e in edges):
        return False
    vals = [p[extreme_axis] for p in poly2d]
    lo, hi = vals.index(min(vals)), vals.index(max(vals))
    return (hi - lo) % m == m // 2 and vals.count(min(vals)) == 1 and vals.count(max(vals)) == 1


def perturbed_polygon(k: int, phase: float, seed: int, extreme_axis: int, radius: int = 1000) -> list[tuple[int, int]]:
    """A regular 2k-gon with integer vertices, perturbed by at most radius/100.

    Vertices are rounded from the circle and moved by integer offsets in
    [-7, 7]^2; offsets are redrawn (deterministically) until the polygon has
    no parallel sides and its extremes along ``extreme_axis`` are opposite.
    """
    rng = np.random.default_rng(seed)
    base = [
        (round(radius * math.cos(math.pi * j / k + phase)), round(radius * math.sin(math.pi * j / k + phase)))
        for j in range(2 * k)
    ]
    for _ in range(1000):
        off = rng.integers(-7, 8, size=(2 * k, 2))
        poly = [(x + int(dx), y + int(dy)) for (x, y), (dx, dy) in zip(base, off)]
        if _cyclic_ok(poly, extreme_axis):
            return poly
    raise RuntimeError("no admissible perturbation found")


def _planar_sum(q1: Sequence[Sequence[int]], q2: Sequence[Sequence[int]]) -> Polytope:
    # q1 lives in x3 = 0 as (x1, x2); q2 in x1 = 0 as (x2, x3)
    Q1 = [(a, b, 0) for a, b in q1]
    Q2 = [(0, a, b) for a, b in q2]
    return minkowski_sum(Q1, Q2)


QUAD_A = ((-5, 0), (1, -6), (5, 1), (0, 5))
QUAD_B = ((0, -5), (6, -1), (1, 5), (-4, 2))


def quadrilateral_sum() -> Polytope:
    """Sum of two quadrilaterals in the planes x3 = 0 and x1 = 0, no parallel sides."""
    assert _cyclic_ok(QUAD_A, 0) and _cyclic_ok(QUAD_B, 1)
    return _planar_sum(QUAD_A, QUAD_B)


def perturbed_polygon_pair(k: int) -> tuple[list, list]:
    if k < 2:
        raise ValueError("k must be >= 2")
    q1 = perturbed_polygon(k, 0.3 * math.pi / k, seed=100 + k, extreme_axis=0)
    q2 = perturbed_polygon(k, 0.2 * math.pi / k, seed=200 + k, extreme_axis=1)
    return q1, q2


def perturbed_polygon_sum(k: int = 3) -> Polytope:
    """Sum of two perturbed regular 2k-gons in non-parallel planes."""
    return _planar_sum(*perturbed_polygon_pair(k))


def triangle_sum() -> Polytope:
    """T1 + T2 + T3 with Ti the triangle on 0 and the two basis vectors other than fi."""
    f = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    o = (0, 0, 0)
    T1, T2, T3 = [o, f[1], f[2]], [o, f[0], f[2]], [o, f[0], f[1]]
    pts = [ex.add(ex.add(a, b), c) for a in T1 for b in T2 for c in T3]
    return convex_hull(pts)


def _lift(points2d) -> GeneratorSet:
    # point p of the affine plane x3 = 1 stands for the generator (p, 1)
    return GeneratorSet.of([(Rat(x), Rat(y), Rat(1)) for x, y in points2d])


def parabola_generators(n: int = 5) -> GeneratorSet:
    """``n`` points on a parabola: no three collinear, so every degree is n - 1."""
    return _lift([(i, i * i) for i in range(n)])


def line_configuration_generators(l: int = 3, k: int = 4, seed: int = 0) -> GeneratorSet:
    """``l`` lines carrying ``k`` points each, otherwise general position."""
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        slopes = rng.choice(np.arange(-20, 21), size=l, replace=False)
        icepts = rng.integers(-30, 31, size=l)
        pts = []
        for m, c in zip(slopes, icepts):
            xs = rng.choice(np.arange(-40, 41), size=k, replace=False)
            pts += [(Rat(int(x)), Rat(int(m) * int(x) + int(c))) for x in xs]
        if len(set(pts)) < l * k:
            continue
        try:
            G = _lift(pts)
        except ValueError:
            continue
        H = coplanarity_hypergraph(G)
        if sorted(len(e) for e in H.edges if len(e) > 2) == [k] * l and all(len(e) in (2, k) for e in H.edges):
            if set(H.degrees) == {1 + (l - 1) * k}:
                return G
    raise RuntimeError("no general-position instance found")


def _meet(p, q, r, s):
    """Intersection of lines pq and rs in the plane."""
    d1, d2 = ex.sub(q, p), ex.sub(s, r)
    den = d1[0] * d2[1] - d1[1] * d2[0]
    t = ((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0]) / den
    return ex.add(p, ex.scale(t, d1))


def pappus_points() -> dict[str, tuple]:
    """The nine points of a Pappus configuration (exact rationals)."""
    F = Rat
    a, b, c = (F(0), F(0)), (F(3), F(0)), (F(7), F(0))
    x, y, z = (F(-1), F(4)), (F(2), F(5)), (F(8), F(7))
    u = _meet(a, y, b, x)
    v = _meet(a, z, c, x)
    w = _meet(b, z, c, y)
    return {"a": a, "b": b, "c": c, "x": x, "y": y, "z": z, "u": u, "v": v, "w": w}


def pappus_generators() -> GeneratorSet:
    return _lift(pappus_points().values())


_POLYTOPES = {
    "cube": cube,
    "tetrahedron": tetrahedron,
    "square": square,
    "parallelogram": parallelogram,
    "quadrilateral_sum": quadrilateral_sum,
    "perturbed_polygon_sum": perturbed_polygon_sum,
    "triangle_sum": triangle_sum,
}
_GENERATORS = {
    "generic_zonotope": generic_zonotope,
    "parabola_generators": parabola_generators,
    "line_configuration_generators": line_configuration_generators,
    "pappus_generators": pappus_generators,
}


def builtin_example(name: str, **params) -> Polytope | GeneratorSet:
    """Look up a gallery entry by name; extra keyword arguments are its parameters."""
    fn = _POLYTOPES.get(name) or _GENERATORS.get(name)
    if fn is None:
        raise UnknownExample(name)
    try:
        return fn(**params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {name}: {exc}") from None


def example_names() -> list[str]:
    return sorted(_POLYTOPES) + sorted(_GENERATORS)
