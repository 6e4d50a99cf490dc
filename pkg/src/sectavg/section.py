"""Average number of vertices of the plane sections of a polytope.

For a direction z, the planes ``z.x = t`` sweep the polytope as t runs over
the support interval ``[t-, t+]``.  The section at a generic level has one
vertex per edge that crosses the level, so integrating the vertex count
over t gives ``sum_e |z.e|``, and the average is

    A(P, z) = sum over edges e of |z.e|  /  (t+ - t-).

:func:`average_vertices_exact` evaluates this ratio exactly.
:func:`average_vertices_sweep` is an independent Monte Carlo check that
slices at random levels and counts crossing edges.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import exact as ex
from .exact import Rat
from .errors import NonGenericLevel, ZeroDirection, ZeroWidth
from .polytope import Polytope
from .sampling import make_rng, random_int_direction, random_sphere_direction, spawn

MAX_LEVEL_RETRIES = 100
DEFAULT_PROBE_DIRECTIONS = 64


@dataclass(frozen=True)
class SupportInterval:
    t_minus: Rat
    t_plus: Rat
    argmin_vertex: int
    argmax_vertex: int

    @property
    def width(self) -> Rat:
        return self.t_plus - self.t_minus


@dataclass(frozen=True)
class EdgeClass:
    direction: tuple[int, ...]
    edges: tuple[int, ...]
    class_sum: ex.Vec

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class EdgeClassPartition:
    classes: tuple[EdgeClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def by_direction(self) -> dict[tuple[int, ...], EdgeClass]:
        return {c.direction: c for c in self.classes}


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo mean with its standard error."""

    mean: float
    stderr: float
    n: int


@dataclass(frozen=True)
class ConstantVerdict:
    """Outcome of :func:`constant_A_probe`.

    ``constant`` verdicts are probabilistic (no disagreement was found);
    ``non_constant`` verdicts carry an exact certificate in ``witness``:
    two directions together with their different exact averages.
    """

    constant: bool
    value: Rat | None = None
    witness: tuple | None = None
    n_dirs: int = 0


def _direction(z: Sequence) -> tuple:
    z = ex.vec(z)
    if ex.is_zero(z):
        raise ZeroDirection("z must be non-zero")
    return z


def _int_direction(z: Sequence) -> tuple[int, ...]:
    # A(P, z) = A(P, sz): clearing denominators changes nothing
    z = _direction(z)
    d = ex.common_denominator([z])
    return tuple(int(c * d) for c in z)


def _integer_frame(P: Polytope):
    """Integer-scaled vertices and edge vectors of P, cached on the instance.

    The average is invariant under positive scaling of P, so exact work can
    use Python ints rather than Fractions.
    """
    frame = P._cache.get("int_frame")
    if frame is None:
        iv = ex.to_integer_points(P.vertices)
        ie = [tuple(b - a for a, b in zip(iv[i], iv[j])) for i, j in P.edges]
        frame = (iv, ie)
        P._cache["int_frame"] = frame
    return frame


def support_interval(P: Polytope, z: Sequence) -> SupportInterval:
    """Exact ``[min z.x, max z.x]`` over P with witnessing vertex indices."""
    z = _direction(z)
    levels = [ex.dot(z, v) for v in P.vertices]
    lo = min(range(len(levels)), key=levels.__getitem__)
    hi = max(range(len(levels)), key=levels.__getitem__)
    return SupportInterval(levels[lo], levels[hi], lo, hi)


def edge_classes(P: Polytope) -> EdgeClassPartition:
    """Group the edges of P into classes of parallel edges.

    Each class carries the canonical (primitive integer) direction and the
    sum of its edge vectors, every edge oriented along that direction.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for k in range(P.n_edges):
        groups.setdefault(ex.canonical_direction(P.edge_vector(k)), []).append(k)
    classes = []
    for d, ks in groups.items():
        total = tuple(Rat(0) for _ in d)
        for k in ks:
            e = P.edge_vector(k)
            if ex.dot(e, d) < 0:
                e = ex.neg(e)
            total = ex.add(total, e)
        classes.append(EdgeClass(d, tuple(ks), total))
    return EdgeClassPartition(tuple(classes))


def slice_vertex_count(P: Polytope, z: Sequence, t) -> int:
    """Number of vertices of the section of P by the plane ``z.x = t``."""
    z, t = _direction(z), ex.rat(t)
    levels = [ex.dot(z, v) for v in P.vertices]
    if any(lv == t for lv in levels):
        raise NonGenericLevel("a vertex lies on the slicing level")
    if not min(levels) < t < max(levels):
        raise ValueError("level outside the open support interval")
    return sum(1 for i, j in P.edges if (levels[i] < t) != (levels[j] < t))


def crossing_sum(P: Polytope, z: Sequence) -> int:
    """``sum_e |z.e|`` in the integer frame of P (z made integral)."""
    zi = _int_direction(z)
    _, ie = _integer_frame(P)
    return sum(abs(zi[0] * e[0] + zi[1] * e[1] + (zi[2] * e[2] if len(e) == 3 else 0)) for e in ie)


def average_vertices_exact(P: Polytope, z: Sequence) -> Rat:
    """Exact average vertex count of the sections of P orthogonal to z.

    Directions orthogonal to some edge are accepted: such an edge simply
    contributes zero, which is the correct value almost everywhere.
    """
    zi = _int_direction(z)
    iv, ie = _integer_frame(P)
    if P.dim == 3:
        a, b, c = zi
        levels = [a * v[0] + b * v[1] + c * v[2] for v in iv]
        num = sum(abs(a * e[0] + b * e[1] + c * e[2]) for e in ie)
    else:
        a, b = zi
        levels = [a * v[0] + b * v[1] for v in iv]
        num = sum(abs(a * e[0] + b * e[1]) for e in ie)
    width = max(levels) - min(levels)
    if width == 0:
        raise ZeroWidth("polytope has zero width in direction z")
    return Rat(num, width)


def _sweep_chunk(lo_edges, hi_edges, vertex_levels, t_lo, t_hi, n, seed):
    rng = make_rng(seed)
    counts = np.empty(n, dtype=np.int64)
    lo_sorted, hi_sorted = np.sort(lo_edges), np.sort(hi_edges)
    filled = 0
    retries = 0
    while filled < n:
        t = rng.uniform(t_lo, t_hi, size=n - filled)
        bad = np.isin(t, vertex_levels) | (t <= t_lo)
        if bad.any():
            retries += int(bad.sum())
            if retries > MAX_LEVEL_RETRIES:
                raise NonGenericLevel("too many samples landed on vertex levels")
            t = t[~bad]
        # edges with lo < t < hi, in O(log E) per sample
        c = np.searchsorted(lo_sorted, t, side="left") - np.searchsorted(hi_sorted, t, side="left")
        counts[filled : filled + len(t)] = c
        filled += len(t)
    return counts


def average_vertices_sweep(P: Polytope, z: Sequence, samples: int = 100_000, seed=0, workers: int = 1) -> Estimate:
    """Monte Carlo average of the section vertex count at uniform random levels.

    Levels are drawn uniformly on the open support interval (in floating
    point) and each section is counted directly as the number of edges
    straddling the level.  Samples are split into ``workers`` chunks, each
    with its own child seed, so the result is reproducible for a fixed
    (seed, workers) pair.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    z = _direction(z)
    vl = np.array([float(ex.dot(z, v)) for v in P.vertices])
    ends = np.array([(vl[i], vl[j]) for i, j in P.edges])
    lo_e, hi_e = ends.min(axis=1), ends.max(axis=1)
    t_lo, t_hi = vl.min(), vl.max()
    if t_lo == t_hi:
        raise ZeroWidth("polytope has zero width in direction z")
    seeds = spawn(seed, workers)
    sizes = [samples // workers + (1 if k < samples % workers else 0) for k in range(workers)]
    args = [(lo_e, hi_e, vl, t_lo, t_hi, sizes[k], seeds[k]) for k in range(workers)]
    if workers == 1:
        parts = [_sweep_chunk(*args[0])]
    else:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda a: _sweep_chunk(*a), args))
    counts = np.concatenate(parts)
    stderr = float(counts.std(ddof=1) / np.sqrt(samples)) if samples > 1 else float("nan")
    return Estimate(float(counts.mean()), stderr, samples)


def spherical_mean_A(P: Polytope, n_dirs: int = 1000, seed=0) -> Estimate:
    """Mean of the exact average over uniformly random directions on the sphere."""
    if n_dirs < 1:
        raise ValueError("n_dirs must be >= 1")
    rng = make_rng(seed)
    vals = np.array([float(average_vertices_exact(P, random_sphere_direction(rng, P.dim))) for _ in range(n_dirs)])
    stderr = float(vals.std(ddof=1) / np.sqrt(n_dirs)) if n_dirs > 1 else 0.0
    return Estimate(float(vals.mean()), stderr, n_dirs)


def constant_A_probe(P: Polytope, n_dirs: int = DEFAULT_PROBE_DIRECTIONS, seed=0, directions=None) -> ConstantVerdict:
    """Look for two directions with different exact averages.

    Evaluates the exact average at ``n_dirs`` random integer directions
    (entries uniform in [-10^6, 10^6]); ``directions`` are tried first when
    given.  A returned witness is a proof of non-constancy, while a
    ``constant`` verdict only means no disagreement was found.
    """
    if n_dirs < 2 and not directions:
        raise ValueError("n_dirs must be >= 2")
    rng = make_rng(seed)
    dirs = [tuple(d) for d in directions or ()]
    dirs += [random_int_direction(rng, P.dim) for _ in range(n_dirs)]
    first = None
    for z in dirs:
        a = average_vertices_exact(P, z)
        if first is None:
            first = (z, a)
        elif a != first[1]:
            return ConstantVerdict(False, None, (first, (z, a)), len(dirs))
    return ConstantVerdict(True, first[1], None, len(dirs))
