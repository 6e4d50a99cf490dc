import pytest

from sectavg.errors import DegenerateInput, EmptySide, NonGenericCut
from sectavg.exact import Rat
from sectavg.gallery import cube, square, tetrahedron, triangle_sum
from sectavg.polytope import (
    box,
    check_polytope,
    convex_hull,
    cut_halfspace,
    difference_body,
    facet_vertices,
    is_centrally_symmetric,
    minkowski_sum,
    reflect,
    translate,
    volume,
)
from sectavg.zonotope import is_zonotope

from oracles import brute_facet_census, brute_vertices, scipy_volume, section_points

CUBE_PTS = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]


def test_cube_combinatorics():
    P = convex_hull(CUBE_PTS)
    assert (P.n_vertices, P.n_edges, P.n_facets) == (8, 12, 6)
    check_polytope(P)


def test_tetrahedron_combinatorics():
    P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert (P.n_vertices, P.n_edges, P.n_facets) == (4, 6, 4)


def test_interior_point_dropped():
    P = convex_hull(CUBE_PTS + [(Rat(1, 2), Rat(1, 2), Rat(1, 2))])
    assert P.key() == cube().key()


def test_degenerate_input_raises():
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0)], dim=3)
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0), (1, 1), (2, 2)], dim=2)


def test_two_segments_sum_to_unit_square():
    S = minkowski_sum([(0, 0), (1, 0)], [(0, 0), (0, 1)])
    assert S.dim == 2 and S.key() == square().key()


def test_triangle_sum_facets():
    P = triangle_sum()
    assert dict(P.facet_census()) == {3: 3, 5: 3, 6: 1}
    assert P.facet_census() == brute_facet_census(P.vertices)


def test_sum_with_point_is_translation():
    T = tetrahedron()
    S = minkowski_sum(T, [(1, 2, 3)])
    assert S.key() == translate(T, (1, 2, 3)).key()
    assert S.facet_census() == T.facet_census()


def test_reflect():
    assert reflect(cube()).key() == box((-1, -1, -1), (0, 0, 0)).key()
    assert reflect(tetrahedron()).n_vertices == 4
    T = triangle_sum()
    assert reflect(reflect(T)).key() == T.key()
    check_polytope(reflect(T))


def test_difference_bodies():
    assert difference_body(cube()).key() == box((-1, -1, -1), (1, 1, 1)).key()
    hexagon = difference_body(convex_hull([(0, 0), (1, 0), (0, 1)]))
    assert hexagon.n_vertices == 6 and is_centrally_symmetric(hexagon)
    assert is_zonotope(difference_body(triangle_sum()))


def test_central_symmetry():
    C = cube()
    assert is_centrally_symmetric(facet_vertices(C, 0))
    assert not is_centrally_symmetric(facet_vertices(tetrahedron(), 0))
    assert is_centrally_symmetric(C)


def test_volume_exact_and_matches_scipy():
    assert volume(cube()) == 1
    assert volume(tetrahedron()) == Rat(1, 6)
    assert volume(square()) == 1
    T = triangle_sum()
    assert float(volume(T)) == pytest.approx(scipy_volume(T.vertices))


def test_cut_cube_axis():
    lo = cut_halfspace(cube(), (0, 0, 1), Rat(1, 2), "below")
    assert lo.key() == box((0, 0, 0), (1, 1, Rat(1, 2))).key()
    assert lo.n_vertices == 8


def test_cut_tetrahedron_matches_brute_force():
    T = tetrahedron()
    z, t = (1, 1, 0), Rat(1, 2)
    lo = cut_halfspace(T, z, t, "below")
    assert lo.n_vertices == 6
    kept = [v for v in T.vertices if v[0] + v[1] < t]
    cloud = kept + [tuple(Rat(c.numerator, c.denominator) for c in p) for p in section_points(T.vertices, z, t)]
    ref = {cloud[i] for i in brute_vertices(cloud)}
    assert ref == set(lo.vertices)


def test_cut_errors():
    with pytest.raises(NonGenericCut):
        cut_halfspace(cube(), (0, 0, 1), 1)
    with pytest.raises(EmptySide):
        cut_halfspace(cube(), (0, 0, 1), 2)
    with pytest.raises(ValueError):
        cut_halfspace(cube(), (0, 0, 1), Rat(1, 2), "sideways")


def test_cut_2d_polygon():
    lo = cut_halfspace(square(), (1, 1), Rat(1, 2), "below")
    assert lo.n_vertices == 3
    hi = cut_halfspace(square(), (1, 1), Rat(1, 2), "above")
    assert hi.n_vertices == 5
    assert volume(lo) + volume(hi) == 1
