"""Enumerate reflexive polygons up to GL(2, Z) and check the equality case."""

from ldp12 import dual, global_rhs, normalized_volume, reflexive_catalogue

catalogue = reflexive_catalogue()
print(f"{len(catalogue)} classes\n")
for p in catalogue:
    nv, nd = normalized_volume(p), normalized_volume(dual(p))
    print(f"{len(p)} vertices  nvol={str(nv):>2}  nvol*={str(nd):>2}  sum={global_rhs(p)}  {list(p.vertices)}")
