"""Exact cross-section vertex averages, zonotope tests, random fragmentation
and grid-plane tilings for convex polytopes in two and three dimensions."""
from .exact import Rat, rat
from .polytope import (
    Polytope,
    box,
    convex_hull,
    cut_both,
    cut_halfspace,
    difference_body,
    is_centrally_symmetric,
    minkowski_sum,
    reflect,
    translate,
    volume,
)
from .section import (
    average_vertices_exact,
    average_vertices_sweep,
    constant_A_probe,
    crossing_sum,
    edge_classes,
    slice_vertex_count,
    spherical_mean_A,
    support_interval,
)
from .zonotope import (
    GeneratorSet,
    build_zonotope,
    coplanarity_hypergraph,
    is_half_zonotope,
    is_zonotope,
    predict_lambda,
    recover_generators,
)
from .fragmentation import (
    classify_cut,
    criticality_of_polytope,
    expected_V1_direction,
    fragment_recursion,
    weak_criticality_scan,
)
from .tiling import GridPlane, plane_contains_lattice_point, tile_polygon, tiling_average, tiling_convergence
from .gallery import builtin_example, example_names

__version__ = "0.1.0"
