"""
Constant averages beyond zonotopes
==================================

Sums of two polygons lying in different planes are not zonotopes, but
their difference bodies are, and their section averages are still
constant.  The same holds for the sum of three coordinate triangles.
"""
from sectavg import constant_A_probe, difference_body, edge_classes, is_half_zonotope, is_zonotope
from sectavg.gallery import perturbed_polygon_sum, quadrilateral_sum, triangle_sum

bodies = [("two quadrilaterals", quadrilateral_sum())]
bodies += [(f"two perturbed {2 * k}-gons", perturbed_polygon_sum(k)) for k in (3, 4, 5)]
bodies += [("three triangles", triangle_sum())]

for name, P in bodies:
    probe = constant_A_probe(P, seed=0)
    print(
        f"{name:22s} V={P.n_vertices:3d} classes={len(edge_classes(P).sizes()):2d} "
        f"zonotope={is_zonotope(P)!s:5s} half-zonotope={is_half_zonotope(P)!s:5s} A={probe.value}"
    )

T = triangle_sum()
print("facets of the triangle sum:", dict(sorted(T.facet_census().items())))
print("its difference body:", difference_body(T))
