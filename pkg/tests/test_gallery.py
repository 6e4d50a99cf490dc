import pytest

from sectavg.errors import UnknownExample
from sectavg.gallery import builtin_example, example_names, perturbed_polygon_pair, perturbed_polygon_sum
from sectavg.polytope import Polytope
from sectavg.section import constant_A_probe, edge_classes
from sectavg.zonotope import GeneratorSet


def test_every_name_builds():
    for name in example_names():
        obj = builtin_example(name)
        assert isinstance(obj, (Polytope, GeneratorSet))


def test_parameters_pass_through():
    G = builtin_example("parabola_generators", n=6)
    assert len(G) == 6
    with pytest.raises(UnknownExample):
        builtin_example("no_such_thing")


def test_perturbed_sum_k4():
    assert constant_A_probe(perturbed_polygon_sum(4)).value == 10


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_perturbed_sum_edge_classes(k):
    P = perturbed_polygon_sum(k)
    sizes = edge_classes(P).sizes()
    assert len(sizes) == 4 * k and set(sizes) == {k + 1}


def test_perturbation_is_small():
    import math

    q1, _ = perturbed_polygon_pair(3)
    assert all(abs(math.hypot(*p) - 1000) <= 15 for p in q1)


def test_instances_are_frozen():
    assert builtin_example("perturbed_polygon_sum", k=3).key() == perturbed_polygon_sum(3).key()
