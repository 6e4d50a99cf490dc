from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from sectavg import exact as ex
from sectavg.errors import NonGenericCut
from sectavg.exact import Rat
from sectavg.fragmentation import classify_cut
from sectavg.polytope import (
    check_polytope,
    convex_hull,
    cut_halfspace,
    difference_body,
    is_centrally_symmetric,
    minkowski_sum,
    translate,
    volume,
)
from sectavg.section import average_vertices_exact, slice_vertex_count, support_interval
from sectavg.zonotope import GeneratorSet, build_zonotope, coplanarity_hypergraph, is_half_zonotope, is_zonotope

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])

coord = st.integers(-6, 6)
point3 = st.tuples(coord, coord, coord)
direction = st.tuples(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50)).filter(any)
rational = st.fractions(min_value=-20, max_value=20, max_denominator=50).map(lambda f: Rat(f.numerator, f.denominator))


@st.composite
def polytopes(draw, max_points=10):
    pts = draw(st.lists(point3, min_size=4, max_size=max_points, unique=True))
    assume(ex.affine_rank(pts) == 3)
    return convex_hull(pts)


@SETTINGS
@given(polytopes())
def test_hull_is_valid(P):
    check_polytope(P)
    assert P.n_vertices - P.n_edges + P.n_facets == 2


@SETTINGS
@given(polytopes(), direction, rational)
def test_scale_invariance(P, z, s):
    assume(s != 0)
    assert average_vertices_exact(P, ex.scale(s, z)) == average_vertices_exact(P, z)


@SETTINGS
@given(polytopes(), direction, st.integers(1, 9), point3)
def test_similarity_invariance(P, z, c, p):
    Q = convex_hull([ex.add(ex.scale(c, v), p) for v in P.vertices])
    assert average_vertices_exact(Q, z) == average_vertices_exact(P, z)
    assert average_vertices_exact(translate(P, p), z) == average_vertices_exact(P, ex.neg(z))


@SETTINGS
@given(polytopes(6), polytopes(6), direction)
def test_minkowski_commutes_and_widths_add(P, Q, z):
    S, T = minkowski_sum(P, Q), minkowski_sum(Q, P)
    assert S.key() == T.key()
    w = lambda K: support_interval(K, z).width
    assert w(S) == w(P) + w(Q)


@SETTINGS
@given(polytopes(), direction, st.integers(1, 999))
def test_cut_identities_and_volume(P, z, u):
    si = support_interval(P, z)
    t = si.t_minus + si.width * Rat(u, 1000)
    try:
        r = classify_cut(P, z, t)
    except NonGenericCut:
        assume(False)
    assert r.V11 + r.V12 == r.V0 + 2 * r.k_star
    assert r.V1 == Rat(r.V0, 2) + r.k_star
    lo, hi = cut_halfspace(P, z, t, "below"), cut_halfspace(P, z, t, "above")
    assert volume(lo) + volume(hi) == volume(P)
    assert 3 <= slice_vertex_count(P, z, t) <= P.n_edges


@SETTINGS
@given(polytopes(7))
def test_difference_body_symmetric_about_origin(P):
    D = difference_body(P)
    assert is_centrally_symmetric(D)
    assert set(D.vertices) == {ex.neg(v) for v in D.vertices}


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)).filter(any), min_size=3, max_size=6))
def test_zonotopes_recognised(gens):
    dirs = {ex.canonical_direction(g) for g in gens}
    assume(len(dirs) == len(gens) and ex.linear_rank(gens) == 3)
    P = build_zonotope(GeneratorSet.of(gens))
    assert is_zonotope(P) and is_half_zonotope(P)
    # each generator's edge class has 2 deg members
    assert P.n_edges == 2 * sum(coplanarity_hypergraph(GeneratorSet.of(gens)).degrees)
