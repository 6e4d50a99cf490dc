"""
Random cuts and fragment vertex counts
======================================

A generic plane splits a polytope with V0 vertices into two pieces whose
vertex counts add up to V0 + 2k*, with k* the size of the cut polygon.
Averaging over random cuts tells whether the mean count grows or shrinks.
"""
from sectavg import classify_cut, criticality_of_polytope, fragment_recursion
from sectavg.exact import Rat
from sectavg.gallery import cube, generic_zonotope, parallelogram, square, tetrahedron
from sectavg.zonotope import build_zonotope

for name, P, z in [("cube", cube(), (0, 0, 1)), ("cube", cube(), (1, 1, 1)), ("tetrahedron", tetrahedron(), (0, 0, 1))]:
    r = classify_cut(P, z, Rat(1, 2))
    print(f"{name} cut {z} at 1/2: k*={r.k_star} pieces {r.V11}+{r.V12} -> {r.cls}")

for name, P in [("cube", cube()), ("parallelogram", parallelogram()), ("zonotope n=4", build_zonotope(generic_zonotope(4, seed=4))), ("tetrahedron", tetrahedron())]:
    c = criticality_of_polytope(P, n_dirs=2000, seed=0)
    print(f"{name:14s} V0={c.V0:2d} mean after one cut={c.V1_bar:.3f} ({'exact' if c.exact else 'estimated'}) -> {c.verdict}")

# following random paths: the square stays at 4, the cube drifts below 8
for name, P in [("square", square()), ("cube", cube())]:
    series = fragment_recursion(P, 4, "paths", 2000, seed=0)
    print(name, " ".join(f"{p.mean_V:.2f}" for p in series))
