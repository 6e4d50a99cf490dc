import numpy as np
import pytest

from sectavg.errors import NonGenericCut, PopulationCapExceeded
from sectavg.exact import Rat
from sectavg.fragmentation import (
    classify_cut,
    criticality_of_polytope,
    expected_V1_direction,
    fragment_recursion,
    random_cut,
    weak_criticality_scan,
)
from sectavg.gallery import cube, generic_zonotope, parallelogram, square, tetrahedron, triangle_sum
from sectavg.polytope import cut_halfspace
from sectavg.sampling import make_rng, random_sphere_direction
from sectavg.section import average_vertices_exact, spherical_mean_A
from sectavg.zonotope import build_zonotope


def test_classify_cut_examples():
    r = classify_cut(cube(), (0, 0, 1), Rat(1, 2))
    assert (r.k_star, r.V0, r.V11, r.V12, r.cls) == (4, 8, 8, 8, "critical")
    r = classify_cut(tetrahedron(), (0, 0, 1), Rat(1, 2))
    assert (r.k_star, r.V0, r.cls) == (3, 4, "supercritical")
    r = classify_cut(cube(), (1, 1, 1), Rat(1, 2))
    assert (r.k_star, r.V0, r.cls) == (3, 8, "subcritical")
    with pytest.raises(NonGenericCut):
        classify_cut(cube(), (0, 0, 1), 1)


def test_expected_V1_direction():
    assert expected_V1_direction(cube(), (3, -1, 7)) == 8
    T = triangle_sum()
    assert T.n_vertices == 10
    assert expected_V1_direction(T, (5, 2, -9)) == 9
    assert expected_V1_direction(tetrahedron(), (0, 0, 1)) == 5


def test_criticality_verdicts():
    c = criticality_of_polytope(cube(), seed=0)
    assert c.verdict == "critical" and c.exact and c.lam == 4
    assert criticality_of_polytope(cube(), seed=11) == c
    assert criticality_of_polytope(parallelogram()).verdict == "critical"
    c = criticality_of_polytope(build_zonotope(generic_zonotope(4, seed=4)))
    assert (c.verdict, c.V0, c.lam) == ("subcritical", 14, 6)
    t = criticality_of_polytope(tetrahedron(), n_dirs=2000)
    assert t.verdict == "supercritical" and not t.exact


def test_full_policy_counts_and_cap():
    series = fragment_recursion(cube(), 3, "full", seed=1)
    assert [p.n_fragments for p in series] == [1, 2, 4, 8]
    with pytest.raises(PopulationCapExceeded):
        fragment_recursion(cube(), 11, "full")


def test_cube_one_step_mean_is_eight():
    vals = [fragment_recursion(cube(), 1, "full", seed=s)[1].mean_V for s in range(400)]
    m, se = np.mean(vals), np.std(vals, ddof=1) / np.sqrt(len(vals))
    assert abs(m - 8) <= 3 * se


def test_tetrahedron_one_step_mean():
    vals = [fragment_recursion(tetrahedron(), 1, "full", seed=s)[1].mean_V for s in range(400)]
    ref = 2 + spherical_mean_A(tetrahedron(), 4000, seed=3).mean
    m, se = np.mean(vals), np.std(vals, ddof=1) / np.sqrt(len(vals))
    assert 5 < ref < 6
    assert abs(m - ref) <= 4 * se


def test_square_paths_stationary():
    series = fragment_recursion(square(), 5, "paths:10000", seed=0)
    for p in series:
        assert abs(p.mean_V - 4) <= 3 * p.stderr


def test_paths_independent_of_worker_count():
    a = fragment_recursion(cube(), 2, "paths", 60, seed=5, workers=1)
    b = fragment_recursion(cube(), 2, "paths", 60, seed=5, workers=3)
    assert [p.mean_V for p in a] == [p.mean_V for p in b]


def test_uniform_policy_runs():
    series = fragment_recursion(cube(), 2, "uniform:50", seed=0)
    assert len(series) == 3 and series[1].n_fragments == 50


def test_weak_scan_square_is_stationary():
    rep = weak_criticality_scan(square(), steps=4, n_paths=4000, seed=0)
    assert all(rep.flags)


def test_weak_scan_tetrahedron_reports():
    rep = weak_criticality_scan(tetrahedron(), steps=3, n_paths=500, seed=0)
    assert len(rep.flags) == 3 and len(rep.means) == 4


@pytest.mark.xfail(strict=True, reason="random cuts of the cube produce fragments whose mean vertex count drifts below 8")
def test_weak_scan_cube_flags_every_step():
    rep = weak_criticality_scan(cube(), steps=5, n_paths=10_000, seed=0)
    assert all(rep.flags)


def test_cube_drift_confirmed_by_exact_evaluator():
    # expected step-2 mean = E[V(F)/2 + A(F, z)] over first-generation fragments F,
    # computed from the exact average instead of a second random cut
    rng = make_rng(123)
    C = cube()
    vals = []
    for _ in range(2000):
        z, t = random_cut(C, rng)
        F = cut_halfspace(C, z, t, "below" if rng.integers(2) == 0 else "above")
        vals.append(F.n_vertices / 2 + float(average_vertices_exact(F, random_sphere_direction(rng, 3))))
    m, se = np.mean(vals), np.std(vals, ddof=1) / np.sqrt(len(vals))
    assert m < 8 - 3 * se
