"""Walk through both sides of the identity for one non-reflexive triangle."""

from ldp12 import dual, global_lhs, kappa, lattice_points, normalized_volume, polygon_from_points
from ldp12.lattice import format_point, format_rational

p = polygon_from_points([(0, -1), (3, 2), (-1, 2)])
print("polygon vertices:", [format_point(v) for v in p.vertices])
print("dual vertices:   ", [format_point(v) for v in dual(p).vertices])

print("\nlattice points with kappa(n) + 1 != 0:")
for n in lattice_points(p):
    weight = kappa(p, n) + 1
    if weight:
        print(f"  {n}: kappa + 1 = {format_rational(weight)}")

nvol, nvol_dual = normalized_volume(p), normalized_volume(dual(p))
print(f"\n12 * sum (kappa + 1)^2 = {global_lhs(p)}")
print(f"nvol(P) + nvol(P*)     = {nvol} + {nvol_dual} = {nvol + nvol_dual}")
