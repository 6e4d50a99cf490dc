from fractions import Fraction

import numpy as np
import pytest

from sectavg import exact as ex
from sectavg.exact import Rat


def test_rat_accepts_exact_inputs():
    assert ex.rat(3) == 3
    assert ex.rat("-6/4") == Rat(-3, 2)
    assert ex.rat(Fraction(1, 3)) == Rat(1, 3)
    assert ex.rat(np.int64(7)) == 7


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_rat_refuses_inexact_inputs(bad):
    with pytest.raises(TypeError):
        ex.rat(bad)


def test_format_rat_is_canonical():
    assert ex.format_rat(Rat(4)) == "4"
    assert ex.format_rat(Rat(-6, 4)) == "-3/2"


def test_canonical_direction_merges_parallel_vectors():
    a = ex.canonical_direction((Rat(-1, 2), 1, 0))
    b = ex.canonical_direction((3, -6, 0))
    assert a == b == (1, -2, 0)
    with pytest.raises(ValueError):
        ex.canonical_direction((0, 0, 0))


def test_integer_points_keep_ratios():
    pts = [(Rat(1, 2), 0, 1), (Rat(1, 3), 2, 0)]
    ip = ex.to_integer_points(pts)
    assert ip == [(3, 0, 6), (2, 12, 0)]


def test_ranks():
    assert ex.affine_rank([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) == 1
    assert ex.affine_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert ex.linear_rank([(1, 0, 0), (0, 1, 0), (1, 1, 0)]) == 2
    assert ex.linear_rank([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3


def test_vector_helpers():
    u, v = ex.vec((1, 2, 3)), ex.vec((4, 5, 6))
    assert ex.cross(u, v) == (-3, 6, -3)
    assert ex.dot(u, v) == 32
    assert ex.det3((1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1
