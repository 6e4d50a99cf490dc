"""
Tiles cut from a plane by the unit cube grid
============================================

Each unit cube meets a plane in a polygon with 3 to 6 vertices.  For a
plane through no lattice point the average over a growing window tends
to 4; the plane x1 + x2 - x3 = 0 is tiled by triangles only.
"""
from sectavg import GridPlane, plane_contains_lattice_point, tiling_average, tiling_convergence
from sectavg.exact import Rat
from sectavg.tiling import reports_to_csv

L = GridPlane.make((1, 2, 3), Rat(1, 2))
print("lattice point on plane:", plane_contains_lattice_point(L))
reports = tiling_convergence(L, [10, 20, 50, 100])
print(reports_to_csv(reports))
for r in reports:
    print(f"m={r.m:4d}  |Ave - 4| = {float(abs(r.average - 4)):.2e}")

r = tiling_average(GridPlane.make((1, 1, -1), 0), 30)
print("x1+x2-x3=0:", r.counts, "average", r.average)
