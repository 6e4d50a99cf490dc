"""
Zonotopes with constant section average
=======================================

For a zonotope, the edges parallel to a generator v number twice the
degree of v in the hypergraph of coplanar generator sets.  When all
degrees agree the section average is the same in every direction.
"""
from sectavg import build_zonotope, constant_A_probe, coplanarity_hypergraph, edge_classes, predict_lambda
from sectavg.gallery import generic_zonotope, line_configuration_generators, pappus_generators, parabola_generators
from sectavg.zonotope import GeneratorSet

cases = {
    "generic, n=6": generic_zonotope(6, seed=0),
    "parabola, n=5": parabola_generators(5),
    "3 lines of 4 points": line_configuration_generators(3, 4),
    "Pappus configuration": pappus_generators(),
    "e1, e2, e3, e1+e2": GeneratorSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)]),
}

for name, G in cases.items():
    H = coplanarity_hypergraph(G)
    pred = predict_lambda(H)
    P = build_zonotope(G)
    probe = constant_A_probe(P, seed=0)
    measured = probe.value if probe.constant else "varies"
    print(f"{name:22s} V={P.n_vertices:3d}  degrees={sorted(set(H.degrees))}  predicted={pred.lam}  measured={measured}")

# class sizes are twice the degrees
G = pappus_generators()
print(sorted(edge_classes(build_zonotope(G)).sizes()), coplanarity_hypergraph(G).degrees)
