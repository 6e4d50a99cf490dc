"""
Average vertex count of plane sections
======================================

Sweep a plane z.x = t through a polytope and average the number of
vertices of the section polygon over t.  The exact value is a ratio of
two integers computed from the edges; a Monte Carlo sweep agrees with it.
"""
from sectavg import average_vertices_exact, average_vertices_sweep, support_interval
from sectavg.gallery import cube, tetrahedron

C = cube()
print(C)
for z in [(0, 0, 1), (1, 1, 1), (3, -7, 2)]:
    print("cube", z, "A =", average_vertices_exact(C, z))

# the tetrahedron is not constant: horizontal sections are always triangles
T = tetrahedron()
for z in [(0, 0, 1), (1, 1, 0), (2, 3, 5)]:
    si = support_interval(T, z)
    exact = average_vertices_exact(T, z)
    est = average_vertices_sweep(T, z, samples=100_000, seed=1)
    print(f"tetrahedron {z}: support [{si.t_minus}, {si.t_plus}]  exact {exact}  sweep {est.mean:.4f} +- {est.stderr:.4f}")

# scaling z does not change the average
print(average_vertices_exact(T, (4, 2, 2)) == average_vertices_exact(T, (2, 1, 1)))
