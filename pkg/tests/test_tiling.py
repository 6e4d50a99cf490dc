from itertools import product

import pytest

from sectavg.errors import NoTiles, ZeroDirection
from sectavg.exact import Rat
from sectavg.tiling import (
    GridPlane,
    plane_contains_lattice_point,
    reports_to_csv,
    tile_polygon,
    tiling_average,
    tiling_convergence,
)

from oracles import brute_tile_count


def test_grid_plane_canonical_form():
    L = GridPlane.make((2, 4, 6), 4)
    assert L.normal == (1, 2, 3) and L.offset == 2
    L = GridPlane.make((-1, 0, 2), 3)
    assert L.normal == (1, 0, -2) and L.offset == -3
    with pytest.raises(ZeroDirection):
        GridPlane.make((0, 0, 0), 1)


def test_lattice_point_test():
    assert plane_contains_lattice_point(GridPlane.make((1, 1, -1), 0))
    assert not plane_contains_lattice_point(GridPlane.make((1, 2, 3), Rat(1, 2)))
    assert plane_contains_lattice_point(GridPlane.make((2, 4, 6), 4))


def test_tile_polygon_examples():
    assert tile_polygon(GridPlane.make((0, 0, 1), Rat(1, 2)), (0, 0, 0)) == 4
    assert tile_polygon(GridPlane.make((1, 2, 3), Rat(1, 2)), (0, 0, 0)) in {3, 4, 5, 6}
    assert tile_polygon(GridPlane.make((0, 0, 1), Rat(1, 2)), (0, 0, 5)) is None
    L = GridPlane.make((1, 1, -1), 0)
    for a in product(range(-2, 2), repeat=3):
        assert tile_polygon(L, a) in (None, 3)


@pytest.mark.parametrize("normal,offset", [((1, 2, 3), Rat(1, 2)), ((3, -5, 7), Rat(2, 3)), ((1, 1, 1), Rat(3, 2)), ((2, 3, 5), 1)])
def test_tile_polygon_matches_cube_clipping(normal, offset):
    L = GridPlane.make(normal, offset)
    for a in product(range(-2, 3), repeat=3):
        assert tile_polygon(L, a) == brute_tile_count(L.normal, L.offset, a)


def test_face_in_plane_counted_once():
    L = GridPlane.make((0, 0, 1), 0)
    r = tiling_average(L, 3)
    assert r.tiles_total == 36 and r.average == 4


def test_tiling_average_examples():
    r = tiling_average(GridPlane.make((1, 1, -1), 0), 20)
    assert r.average == 3 and set(r.counts) == {3}
    r = tiling_average(GridPlane.make((0, 0, 1), Rat(1, 2)), 10)
    assert r.average == 4 and r.counts == {4: 400}
    r = tiling_average(GridPlane.make((1, 2, 3), Rat(1, 2)), 100)
    assert abs(r.average - 4) <= Rat(1, 10)
    assert sum(k * c for k, c in r.counts.items()) == r.average * r.tiles_total
    with pytest.raises(NoTiles):
        tiling_average(GridPlane.make((0, 0, 1), Rat(101, 2)), 10)
    with pytest.raises(ValueError):
        tiling_average(GridPlane.make((0, 0, 1), Rat(1, 2)), 0)


def test_convergence_series():
    reps = tiling_convergence(GridPlane.make((1, 2, 3), Rat(1, 2)), [10, 20, 50, 100])
    devs = [abs(r.average - 4) for r in reps]
    assert all(b < a for a, b in zip(devs, devs[1:]))
    # deviation shrinks like 1/m
    assert max(d * r.m for d, r in zip(devs, reps)) < 1
    assert {r.average for r in tiling_convergence(GridPlane.make((0, 0, 1), Rat(1, 2)), [2, 4])} == {4}
    assert {r.average for r in tiling_convergence(GridPlane.make((1, 1, -1), 0), [2, 4])} == {3}
    with pytest.raises(ValueError):
        tiling_convergence(GridPlane.make((1, 2, 3), Rat(1, 2)), [20, 10])


def test_csv_columns():
    text = reports_to_csv([tiling_average(GridPlane.make((0, 0, 1), Rat(1, 2)), 2)])
    assert text.splitlines() == ["m,tiles,n3,n4,n5,n6,average", "2,16,0,16,0,0,4"]
