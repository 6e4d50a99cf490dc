"""Random bisection of polytopes and the vertex-count recursion.

A cut by a generic plane splits a polytope with V0 vertices into two
pieces.  The section polygon contributes its k* vertices to both pieces,
and every old vertex goes to exactly one piece.  So the two vertex counts
sum to V0 + 2k*, and their mean is V0/2 + k*.  Averaging over a uniform
random level at fixed direction z gives the expected mean
V0/2 + A(P, z).

Repeating the cut on every piece gives a population of 2^i fragments after
i steps.  :func:`fragment_recursion` either tracks the whole population
(small i) or follows independent random root-to-leaf paths, which give an
unbiased estimate of the population mean.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import exact as ex
from .exact import Rat
from .errors import NonGenericCut, PopulationCapExceeded
from .polytope import Polytope, cut_halfspace
from .sampling import make_rng, random_sphere_direction, spawn, uniform_level
from .section import (
    DEFAULT_PROBE_DIRECTIONS,
    average_vertices_exact,
    constant_A_probe,
    slice_vertex_count,
    spherical_mean_A,
    support_interval,
)

MAX_FULL_STEPS = 10
MAX_CUT_RETRIES = 100


@dataclass(frozen=True)
class CutRecord:
    z: tuple
    t: Rat
    k_star: int
    V0: int
    V11: int
    V12: int
    V1: Rat
    cls: str


@dataclass(frozen=True)
class Criticality:
    verdict: str
    V0: int
    V1_bar: float
    stderr: float
    exact: bool
    lam: Rat | None = None


@dataclass
class FragmentPopulation:
    """Vertex counts of the fragments alive after ``step`` cuts."""

    step: int
    mean_V: float
    stderr: float
    n_fragments: int
    policy: str
    vertex_counts: np.ndarray = field(repr=False)
    fragments: tuple = field(default=(), repr=False)


@dataclass
class WeakCriticalityReport:
    series: list[FragmentPopulation]
    flags: list[bool]
    band: float

    @property
    def means(self) -> list[float]:
        return [p.mean_V for p in self.series]


def _classify(V1: Rat, V0: int) -> str:
    if V1 == V0:
        return "critical"
    return "supercritical" if V1 > V0 else "subcritical"


def classify_cut(P: Polytope, z: Sequence, t) -> CutRecord:
    """Cut P by ``z.x = t`` and classify the cut by the descendants' mean vertex count."""
    z, t = ex.vec(z), ex.rat(t)
    below = cut_halfspace(P, z, t, "below")
    above = cut_halfspace(P, z, t, "above")
    k = slice_vertex_count(P, z, t)
    V0 = P.n_vertices
    V11, V12 = below.n_vertices, above.n_vertices
    V1 = Rat(V11 + V12, 2)
    assert V11 + V12 == V0 + 2 * k
    assert V1 == Rat(V0, 2) + k
    cls = _classify(V1, V0)
    # cut class and section size k* against V0/2 must agree
    assert cls == _classify(Rat(V0, 2) + k, V0)
    return CutRecord(z, t, k, V0, V11, V12, V1, cls)


def expected_V1_direction(P: Polytope, z: Sequence) -> Rat:
    """Expected mean vertex count of the two pieces for a uniform level along z."""
    return Rat(P.n_vertices, 2) + average_vertices_exact(P, z)


def criticality_of_polytope(P: Polytope, n_dirs: int = 1000, seed=0) -> Criticality:
    """Compare the direction-averaged descendant mean with V0.

    When the probe finds the section average constant (value lam), the
    verdict is exact: compare lam with V0/2.  Otherwise the spherical mean
    is estimated by Monte Carlo over ``n_dirs`` directions and reported
    with its standard error; the verdict is the sign of the point estimate.
    """
    V0 = P.n_vertices
    probe = constant_A_probe(P, DEFAULT_PROBE_DIRECTIONS, seed=seed)
    if probe.constant:
        v1 = Rat(V0, 2) + probe.value
        return Criticality(_classify(v1, V0), V0, float(v1), 0.0, True, probe.value)
    est = spherical_mean_A(P, n_dirs, seed=seed)
    v1 = V0 / 2 + est.mean
    if v1 == V0:
        verdict = "critical"
    else:
        verdict = "supercritical" if v1 > V0 else "subcritical"
    return Criticality(verdict, V0, v1, est.stderr, False)


def random_cut(P: Polytope, rng: np.random.Generator):
    """Direction uniform on the sphere, level uniform on the support interval."""
    for _ in range(MAX_CUT_RETRIES):
        z = random_sphere_direction(rng, P.dim)
        si = support_interval(P, z)
        t = uniform_level(rng, si.t_minus, si.t_plus)
        if all(ex.dot(z, v) != t for v in P.vertices):
            return z, t
    raise NonGenericCut("could not draw a generic cut")


def _pieces(P: Polytope, rng) -> tuple[Polytope, Polytope]:
    z, t = random_cut(P, rng)
    return cut_halfspace(P, z, t, "below"), cut_halfspace(P, z, t, "above")


def _follow_path(P: Polytope, steps: int, seed) -> list[int]:
    rng = make_rng(seed)
    counts = [P.n_vertices]
    for _ in range(steps):
        z, t = random_cut(P, rng)
        side = "below" if rng.integers(2) == 0 else "above"
        P = cut_halfspace(P, z, t, side)
        if P.dim == 3:
            assert P.n_vertices >= 4
        counts.append(P.n_vertices)
    return counts


def _follow_paths(P: Polytope, steps: int, seeds) -> list[list[int]]:
    return [_follow_path(P, steps, s) for s in seeds]


def _population(step, counts, policy, fragments=()) -> FragmentPopulation:
    arr = np.asarray(counts, dtype=np.int64)
    se = float(arr.std(ddof=1) / np.sqrt(len(arr))) if len(arr) > 1 else 0.0
    return FragmentPopulation(step, float(arr.mean()), se, len(arr), policy, arr, tuple(fragments))


def _parse_policy(policy: str, n_paths: int | None) -> tuple[str, int | None]:
    if policy.startswith("paths:"):
        return "paths", int(policy.split(":", 1)[1])
    if policy.startswith("uniform:"):
        return "uniform", int(policy.split(":", 1)[1])
    return policy, n_paths


def fragment_recursion(
    P: Polytope,
    steps: int,
    policy: str = "full",
    n_paths: int | None = None,
    seed=0,
    workers: int = 1,
) -> list[FragmentPopulation]:
    """Series of fragment populations for steps 0..``steps``.

    ``policy``:

    * ``"full"`` cuts every fragment at every step (2^i fragments, at most
      ``MAX_FULL_STEPS`` steps).
    * ``"paths"`` (or ``"paths:K"``) follows ``n_paths`` independent random
      root-to-leaf paths, picking one of the two pieces with probability
      1/2 at each cut.  Path ``j`` uses the ``j``-th child seed, so the
      output does not depend on ``workers``.
    * ``"uniform"`` (or ``"uniform:K"``) keeps a single fragment per step
      and cuts it ``n_paths`` times, reporting the mean descendant count;
      the next fragment is one piece of the last cut.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    policy, n_paths = _parse_policy(policy, n_paths)

    if policy == "full":
        if steps > MAX_FULL_STEPS:
            raise PopulationCapExceeded(f"full tracking is capped at {MAX_FULL_STEPS} steps")
        rng = make_rng(seed)
        pop = [P]
        out = [_population(0, [P.n_vertices], "full", pop)]
        for i in range(1, steps + 1):
            pop = [piece for F in pop for piece in _pieces(F, rng)]
            out.append(_population(i, [F.n_vertices for F in pop], "full", pop))
        return out

    if policy == "paths":
        if not n_paths or n_paths < 1:
            raise ValueError("paths policy needs n_paths >= 1")
        seeds = spawn(seed, n_paths)
        if workers > 1:
            chunks = [seeds[w::workers] for w in range(workers)]
            with ProcessPoolExecutor(workers) as pool:
                parts = list(pool.map(_follow_paths, [P] * workers, [steps] * workers, chunks))
            rows = [None] * n_paths
            for w, part in enumerate(parts):
                rows[w::workers] = part
        else:
            rows = _follow_paths(P, steps, seeds)
        table = np.array(rows, dtype=np.int64)
        return [_population(i, table[:, i], "paths") for i in range(steps + 1)]

    if policy == "uniform":
        n_cuts = n_paths or 1000
        rng = make_rng(seed)
        out = [_population(0, [P.n_vertices], "uniform")]
        cur = P
        for i in range(1, steps + 1):
            means = []
            for _ in range(n_cuts):
                a, b = _pieces(cur, rng)
                means.append((a.n_vertices + b.n_vertices) / 2)
            out.append(_population(i, means, "uniform"))
            cur = a if rng.integers(2) == 0 else b
        return out

    raise ValueError(f"unknown policy {policy!r}")


def weak_criticality_scan(P: Polytope, steps: int = 5, n_paths: int = 10_000, seed=0, workers: int = 1, z_band: float = 3.0) -> WeakCriticalityReport:
    """Flag steps whose mean vertex count does not move within the noise.

    Step i is flagged when |V_{i+1} - V_i| is at most ``z_band`` combined
    standard errors.  The test is statistical; it cannot certify exact
    stationarity.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    series = fragment_recursion(P, steps, "paths", n_paths, seed=seed, workers=workers)
    flags = []
    for a, b in zip(series, series[1:]):
        tol = z_band * float(np.hypot(a.stderr, b.stderr))
        flags.append(abs(b.mean_V - a.mean_V) <= tol)
    return WeakCriticalityReport(series, flags, z_band)


def default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))
