"""Reproduction checks, one per acceptance criterion.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in
order and :func:`format_table` renders the pass/fail table printed by
``sectavg verify-paper``.  Tolerances are fixed here and not tunable.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import exact as ex
from .exact import Rat
from .fragmentation import classify_cut, criticality_of_polytope, fragment_recursion, random_cut
from .gallery import (
    cube,
    quadrilateral_sum,
    perturbed_polygon_sum,
    triangle_sum,
    parabola_generators,
    line_configuration_generators,
    pappus_generators,
    generic_zonotope,
    parallelogram,
    tetrahedron,
)
from .polytope import Polytope, convex_hull, cut_halfspace, volume
from .sampling import make_rng, random_int_direction
from .section import average_vertices_exact, average_vertices_sweep, constant_A_probe, edge_classes
from .tiling import GridPlane, plane_contains_lattice_point, tiling_convergence, tiling_average
from .zonotope import (
    GeneratorSet,
    build_zonotope,
    coplanarity_hypergraph,
    is_half_zonotope,
    is_zonotope,
    predict_lambda,
)


@dataclass
class CheckResult:
    number: int
    label: str
    passed: bool
    detail: str
    seconds: float = 0.0


def random_rational_direction(rng) -> tuple:
    """Integer direction divided componentwise by random positive denominators."""
    z = random_int_direction(rng)
    return tuple(Rat(c, int(rng.integers(1, 1000))) for c in z)


def _exact_values(P: Polytope, n: int, rng) -> set:
    return {average_vertices_exact(P, random_rational_direction(rng)) for _ in range(n)}


def corpus() -> list[tuple[str, Polytope]]:
    """Twenty 3-polytopes used by the statistical and scaling checks."""
    out = [
        ("cube", cube()),
        ("tetrahedron", tetrahedron()),
        ("quadrilateral_sum", quadrilateral_sum()),
        ("perturbed_polygon_sum(k=3)", perturbed_polygon_sum(3)),
        ("triangle_sum", triangle_sum()),
        ("parabola_generators(n=5)", build_zonotope(parabola_generators(5))),
        ("pappus", build_zonotope(pappus_generators())),
        ("octahedron", convex_hull([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])),
        ("triangular_prism", convex_hull([(0, 0, 0), (2, 0, 0), (0, 1, 0), (0, 0, 3), (2, 0, 3), (0, 1, 3)])),
        ("square_pyramid", convex_hull([(0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0), (1, 1, 1)])),
    ]
    for n in (4, 5, 6):
        out.append((f"generic_zonotope(n={n})", build_zonotope(generic_zonotope(n, seed=n))))
    out.append(("cube_corner_cut", cut_halfspace(cube(), (1, 1, 1), Rat(1, 2), "above")))
    out.append(("tetra_cut", cut_halfspace(tetrahedron(), (1, 1, 0), Rat(1, 2), "below")))
    rng = np.random.default_rng(2024)
    while len(out) < 20:
        pts = [tuple(int(c) for c in rng.integers(-6, 7, size=3)) for _ in range(12)]
        out.append((f"random_hull_{len(out)}", convex_hull(pts)))
    return out


def check_cube_constancy(seed=0) -> CheckResult:
    rng = make_rng(seed)
    C = cube()
    t0 = time.perf_counter()
    vals = _exact_values(C, 1000, rng)
    dt = time.perf_counter() - t0
    ok = vals == {4} and dt < 1.0
    return CheckResult(1, "cube: constant average 4", ok, f"values={sorted(map(str, vals))} in {dt:.2f}s (limit 1s)")


def check_generic_zonotopes(seed=0) -> CheckResult:
    rng = make_rng(seed)
    t0 = time.perf_counter()
    bad = []
    for n in range(4, 9):
        P = build_zonotope(generic_zonotope(n, seed=seed + n))
        vals = _exact_values(P, 100, rng)
        sizes = set(edge_classes(P).sizes())
        if vals != {2 * (n - 1)} or sizes != {2 * (n - 1)}:
            bad.append((n, vals, sizes))
    dt = time.perf_counter() - t0
    return CheckResult(2, "generic zonotope: A = 2(n-1)", not bad and dt < 30, f"n=4..8 failures={bad} in {dt:.1f}s (limit 30s)")


def check_degree_prediction(seed=0) -> CheckResult:
    parts = []
    ok = True
    for name, G, lam in [
        ("parabola(n=5)", parabola_generators(5), 8),
        ("lines(l=3,k=4)", line_configuration_generators(3, 4), 18),
        ("Pappus", pappus_generators(), 10),
    ]:
        pred = predict_lambda(coplanarity_hypergraph(G))
        probe = constant_A_probe(build_zonotope(G), seed=seed)
        good = pred.constant and pred.lam == lam and probe.constant and probe.value == lam
        ok &= good
        parts.append(f"{name}: predicted {pred.lam}, measured {probe.value}")
    G = GeneratorSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)])
    pred = predict_lambda(coplanarity_hypergraph(G))
    P = build_zonotope(G)
    probe = constant_A_probe(P, seed=seed)
    wit_ok = False
    if not probe.constant:
        (z1, a1), (z2, a2) = probe.witness
        wit_ok = a1 != a2 and average_vertices_exact(P, z1) == a1 and average_vertices_exact(P, z2) == a2
    ok &= (not pred.constant) and pred.degrees == (2, 2, 3, 2) and wit_ok
    parts.append(f"unbalanced degrees {pred.degrees}: witness {'ok' if wit_ok else 'missing'}")
    return CheckResult(3, "zonotope: constant A = 2 deg", ok, "; ".join(parts))


def _half_not_zono(P: Polytope) -> bool:
    return (not is_zonotope(P)) and is_half_zonotope(P)


def check_quadrilateral_sum(seed=0) -> CheckResult:
    P = quadrilateral_sum()
    vals = _exact_values(P, 100, make_rng(seed))
    sizes = edge_classes(P).sizes()
    ok = vals == {6} and len(sizes) == 8 and set(sizes) == {3} and _half_not_zono(P)
    return CheckResult(4, "quadrilateral sum: A = 6", ok, f"A={sorted(map(str, vals))}, classes={len(sizes)} sizes={sorted(set(sizes))}")


def check_perturbed_polygon_sum(seed=0) -> CheckResult:
    rng = make_rng(seed)
    parts, ok = [], True
    for k in (3, 4, 5):
        P = perturbed_polygon_sum(k)
        vals = _exact_values(P, 100, rng)
        good = vals == {2 * (k + 1)} and _half_not_zono(P)
        ok &= good
        parts.append(f"k={k}: A={sorted(map(str, vals))}")
    return CheckResult(5, "perturbed 2k-gon sum: A = 2(k+1)", ok, "; ".join(parts))


def check_triangle_sum(seed=0) -> CheckResult:
    P = triangle_sum()
    vals = _exact_values(P, 100, make_rng(seed))
    census = dict(sorted(P.facet_census().items()))
    ok = vals == {4} and census == {3: 3, 5: 3, 6: 1} and _half_not_zono(P)
    return CheckResult(6, "triangle sum: A = 4, 3+3+1 facets", ok, f"A={sorted(map(str, vals))}, census={census}")


def cut_corpus() -> list[Polytope]:
    return [
        cube(),
        tetrahedron(),
        build_zonotope(generic_zonotope(4, seed=4)),
        build_zonotope(parabola_generators(5)),
        quadrilateral_sum(),
        perturbed_polygon_sum(3),
        triangle_sum(),
    ]


def check_cut_identity(seed=0, n_cuts=1000) -> CheckResult:
    rng = make_rng(seed)
    polys = cut_corpus()
    vols = [volume(P) for P in polys]
    failures = 0
    for i in range(n_cuts):
        j = i % len(polys)
        P = polys[j]
        z, t = random_cut(P, rng)
        rec = classify_cut(P, z, t)
        lo, hi = cut_halfspace(P, z, t, "below"), cut_halfspace(P, z, t, "above")
        if not (
            rec.V1 == Rat(rec.V0, 2) + rec.k_star
            and rec.V11 + rec.V12 == rec.V0 + 2 * rec.k_star
            and volume(lo) + volume(hi) == vols[j]
        ):
            failures += 1
    return CheckResult(7, "cut identity: V1 = V0/2 + k*", failures == 0, f"{n_cuts} cuts, {failures} failures")


def check_cut_classes() -> CheckResult:
    C, T = cube(), tetrahedron()
    got = [
        classify_cut(C, (0, 0, 1), Rat(1, 2)),
        classify_cut(C, (1, 1, 1), Rat(1, 2)),
        classify_cut(T, (0, 0, 1), Rat(1, 2)),
    ]
    want = [("critical", 4), ("subcritical", 3), ("supercritical", 3)]
    ok = [(r.cls, r.k_star) for r in got] == want
    return CheckResult(8, "cut classification", ok, ", ".join(f"{r.cls}(k*={r.k_star})" for r in got))


def check_criticality(seed=0, n_paths=10_000, steps=5) -> CheckResult:
    parts = []
    c1 = criticality_of_polytope(cube(), seed=seed)
    c1b = criticality_of_polytope(cube(), seed=seed + 1)
    c2 = criticality_of_polytope(parallelogram(), seed=seed)
    c3 = criticality_of_polytope(build_zonotope(generic_zonotope(4, seed=4)), seed=seed)
    verdicts_ok = (
        c1.verdict == "critical" and c1.exact and c1.lam == 4 and c1 == c1b
        and c2.verdict == "critical"
        and c3.verdict == "subcritical" and c3.exact and c3.lam == 6 and c3.V0 == 14
    )
    parts.append(f"cube {c1.verdict}, parallelogram {c2.verdict}, zonotope(n=4) {c3.verdict} (lam={c3.lam}, V0={c3.V0})")
    series = fragment_recursion(cube(), steps, "paths", n_paths, seed=seed)
    devs = [(p.mean_V - 8) / p.stderr if p.stderr else 0.0 for p in series]
    series_ok = all(abs(p.mean_V - 8) <= 3 * p.stderr for p in series)
    parts.append("V_i=" + ", ".join(f"{p.mean_V:.3f}+-{p.stderr:.3f}" for p in series))
    parts.append("dev/se=" + ", ".join(f"{d:.1f}" for d in devs))
    return CheckResult(9, "criticality; cube recursion V = 8", verdicts_ok and series_ok, "; ".join(parts))


def check_sweep_oracle(seed=0, n_dirs=20, samples=100_000) -> CheckResult:
    rng = make_rng(seed)
    worst_z, worst_abs, n_bad = 0.0, 0.0, 0
    for name, P in corpus():
        for _ in range(n_dirs):
            z = random_int_direction(rng)
            exact = float(average_vertices_exact(P, z))
            est = average_vertices_sweep(P, z, samples, seed=int(rng.integers(2**63)))
            err = abs(est.mean - exact)
            worst_abs = max(worst_abs, err)
            if est.stderr > 0:
                worst_z = max(worst_z, err / est.stderr)
            if err > 3 * est.stderr or err > 1e-2:
                n_bad += 1
    return CheckResult(
        10, "sweep vs exact average", n_bad == 0,
        f"400 pairs, worst |err|={worst_abs:.4f}, worst err/se={worst_z:.2f}, {n_bad} outside tolerance",
    )


def check_tiling() -> CheckResult:
    t0 = time.perf_counter()
    L = GridPlane.make((1, 2, 3), Rat(1, 2))
    reps = tiling_convergence(L, [10, 20, 50, 100])
    devs = [abs(r.average - 4) for r in reps]
    dt = time.perf_counter() - t0
    L0 = GridPlane.make((1, 1, -1), 0)
    r0 = tiling_average(L0, 50)
    ok = (
        not plane_contains_lattice_point(L)
        and devs[-1] <= Rat(1, 10)
        and all(b < a for a, b in zip(devs, devs[1:]))
        and r0.average == 3 and set(r0.counts) == {3}
        and dt < 60
    )
    return CheckResult(
        11, "grid-plane tiling: Ave -> 4", ok,
        "|Ave-4| = " + ", ".join(f"{float(d):.2e}" for d in devs) + f"; x1+x2-x3=0: Ave={r0.average}, tiles={r0.counts}; {dt:.1f}s",
    )


def check_scale_invariance(seed=0) -> CheckResult:
    rng = make_rng(seed)
    bad = 0
    for name, P in corpus():
        for _ in range(10):
            z = random_rational_direction(rng)
            s = Rat(int(rng.integers(1, 10**6)), int(rng.integers(1, 10**6))) * (1 if rng.integers(2) else -1)
            if average_vertices_exact(P, ex.scale(s, z)) != average_vertices_exact(P, z):
                bad += 1
    return CheckResult(12, "scale invariance A(P, sz)", bad == 0, f"{bad} mismatches over 200 (P, z, s)")


CHECKS: list[tuple[int, Callable[..., CheckResult]]] = [
    (1, check_cube_constancy),
    (2, check_generic_zonotopes),
    (3, check_degree_prediction),
    (4, check_quadrilateral_sum),
    (5, check_perturbed_polygon_sum),
    (6, check_triangle_sum),
    (7, check_cut_identity),
    (8, lambda seed=0: check_cut_classes()),
    (9, check_criticality),
    (10, check_sweep_oracle),
    (11, lambda seed=0: check_tiling()),
    (12, check_scale_invariance),
]


def run_check(number: int, seed=0) -> CheckResult:
    fn = dict(CHECKS)[number]
    t0 = time.perf_counter()
    res = fn(seed=seed)
    res.seconds = time.perf_counter() - t0
    return res


def run_all(seed=0, only=None) -> list[CheckResult]:
    return [run_check(n, seed) for n, _ in CHECKS if only is None or n in only]


def format_table(results: list[CheckResult]) -> str:
    lines = [f"{'#':>2}  {'claim':<42} {'result':<6} {'time':>7}  detail"]
    for r in results:
        lines.append(f"{r.number:>2}  {r.label:<42} {'PASS' if r.passed else 'FAIL':<6} {r.seconds:>6.1f}s  {r.detail}")
    n_ok = sum(r.passed for r in results)
    lines.append(f"{n_ok}/{len(results)} checks passed")
    return "\n".join(lines)
