"""Tiles cut from a plane by the unit cube grid.

The plane ``n.x = c`` (integer normal, rational offset) meets the cube
``C(a) = [a1, a1+1] x [a2, a2+1] x [a3, a3+1]`` in a convex polygon whose
vertices are the cube corners lying on the plane plus one point on every
cube edge the plane crosses strictly.  Counting those is exact integer
work after clearing the denominator of ``c``.

:func:`tiling_average` counts tiles in the window ``[-m, m]^3``: exactly the
tiles of cubes with all indices in ``[-m, m)``.
"""
from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from . import exact as ex
from .errors import NoTiles, ZeroDirection
from .exact import Rat

CORNERS = np.array(list(product((0, 1), repeat=3)), dtype=np.int64)
# the 12 cube edges as pairs of corner indices differing in one coordinate
CUBE_EDGES = np.array(
    [(i, j) for i in range(8) for j in range(i + 1, 8) if np.abs(CORNERS[i] - CORNERS[j]).sum() == 1],
    dtype=np.int64,
)


@dataclass(frozen=True)
class GridPlane:
    """The plane ``normal . x = offset``, normal primitive with first nonzero entry positive."""

    normal: tuple
    offset: Rat

    @classmethod
    def make(cls, normal: Sequence[int], offset) -> "GridPlane":
        nrm = [int(c) for c in normal]
        if not any(nrm):
            raise ZeroDirection("plane normal must be non-zero")
        g = reduce(gcd, nrm)
        c = ex.rat(offset) / g
        nrm = [v // g for v in nrm]
        if next(v for v in nrm if v != 0) < 0:
            nrm, c = [-v for v in nrm], -c
        return cls(tuple(nrm), c)

    def scaled(self) -> tuple[np.ndarray, int]:
        """Integer form ``N.x = C`` of the plane (denominator of the offset cleared)."""
        d = int(self.offset.denominator)
        return np.array(self.normal, dtype=np.int64) * d, int(self.offset.numerator)


@dataclass(frozen=True)
class TilingReport:
    m: int
    counts: dict
    tiles_total: int
    average: Rat
    excluded: int

    def row(self) -> dict:
        return {
            "m": self.m,
            "tiles": self.tiles_total,
            **{f"n{k}": self.counts.get(k, 0) for k in (3, 4, 5, 6)},
            "average": ex.format_rat(self.average),
        }


def plane_contains_lattice_point(L: GridPlane) -> bool:
    """With a primitive normal, integer points exist on the plane iff the offset is an integer."""
    return L.offset.denominator == 1


def _tile_counts(N: np.ndarray, C: int, cubes: np.ndarray) -> np.ndarray:
    """Vertex count of the plane section for each cube index row (0/1/2 mean degenerate).

    A face of the cube lying in the plane is credited to the cube above it
    (in the direction of the normal) only, so shared faces are counted once.
    """
    vals = (cubes @ N)[:, None] + (CORNERS @ N)[None, :] - C
    on = vals == 0
    sgn = np.sign(vals)
    a, b = sgn[:, CUBE_EDGES[:, 0]], sgn[:, CUBE_EDGES[:, 1]]
    crossings = ((a * b) < 0).sum(axis=1)
    k = on.sum(axis=1) + crossings
    face = on.sum(axis=1) == 4
    if face.any():
        # the whole cube sits on one side; keep the face only if that side is positive
        below = (vals <= 0).all(axis=1)
        k = np.where(face & below, 0, k)
    return k


def tile_polygon(L: GridPlane, a: Sequence[int]) -> int | None:
    """Vertex count of the tile cut from cube ``C(a)``, or None if not 2D."""
    N, C = L.scaled()
    k = int(_tile_counts(N, C, np.array([list(a)], dtype=np.int64))[0])
    return k if k >= 3 else None


def _candidate_cubes(N: np.ndarray, C: int, m: int) -> np.ndarray:
    """Cube indices in [-m, m)^3 whose cube meets the plane."""
    ax = int(np.argmax(np.abs(N)))
    if N[ax] < 0:
        N, C = -N, -C
    others = [i for i in range(3) if i != ax]
    g = np.arange(-m, m, dtype=np.int64)
    u, v = np.meshgrid(g, g, indexing="ij")
    u, v = u.ravel(), v.ravel()
    base = N[others[0]] * u + N[others[1]] * v
    lo_corner = int(np.minimum(0, N).sum())
    hi_corner = int(np.maximum(0, N).sum())
    nk = int(N[ax])
    # need base + nk*w + lo_corner <= C <= base + nk*w + hi_corner
    wmin = -((base + hi_corner - C) // nk)  # ceil((C - hi - base) / nk)
    wmax = (C - lo_corner - base) // nk
    span = int((wmax - wmin).max(initial=-1)) + 1
    if span <= 0:
        return np.empty((0, 3), dtype=np.int64)
    rows = []
    for off in range(span):
        w = wmin + off
        ok = (w <= wmax) & (w >= -m) & (w < m)
        cube = np.empty((int(ok.sum()), 3), dtype=np.int64)
        cube[:, others[0]] = u[ok]
        cube[:, others[1]] = v[ok]
        cube[:, ax] = w[ok]
        rows.append(cube)
    return np.concatenate(rows)


def tiling_average(L: GridPlane, m: int) -> TilingReport:
    """Exact average tile vertex count over tiles inside ``[-m, m]^3``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    N, C = L.scaled()
    cubes = _candidate_cubes(N, C, m)
    k = _tile_counts(N, C, cubes) if len(cubes) else np.empty(0, dtype=np.int64)
    good = k >= 3
    hist = Counter({int(v): int(c) for v, c in zip(*np.unique(k[good], return_counts=True))})
    total = int(good.sum())
    if total == 0:
        raise NoTiles("the plane produces no tile inside the window")
    assert all(3 <= v <= 6 for v in hist)
    avg = Rat(int(k[good].sum()), total)
    return TilingReport(m, dict(sorted(hist.items())), total, avg, int((~good).sum()))


def tiling_convergence(L: GridPlane, windows: Iterable[int]) -> list[TilingReport]:
    ws = list(windows)
    if any(b <= a for a, b in zip(ws, ws[1:])):
        raise ValueError("windows must be increasing")
    return [tiling_average(L, m) for m in ws]


CSV_COLUMNS = ["m", "tiles", "n3", "n4", "n5", "n6", "average"]


def reports_to_csv(reports: Iterable[TilingReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()
