"""Edge types under a z-orientation, and which orientations are homogeneous.

Choosing a direction for every zigzag splits the edges in two: an edge is
type I when its two passes run in opposite directions and type II when
they agree (type II edges inherit a direction).  An orientation is
homogeneous when every face has exactly one type-II edge.  For the
4-gonal bipyramid only some of the 16 orientations qualify.
"""

from zigzags import all_z_orientations, bipyramid, classify, is_homogeneous

t = bipyramid(4)
print(f"4-gonal bipyramid: {len(t.edges)} edges, 4 zigzags, 16 orientations")
print()
print("bits | type-I | type-II | homogeneous")
print("-----+--------+---------+------------")
for tau in all_z_orientations(t):
    cls = classify(t, tau)
    n_i = sum(1 for ty in cls.edge_types.values() if ty == "I")
    n_ii = len(cls.edge_types) - n_i
    bits = "".join(map(str, tau.bits))
    mark = "yes" if is_homogeneous(t, tau) else ""
    print(f"{bits} | {n_i:6d} | {n_ii:7d} | {mark}")

print()
tau = next(x for x in all_z_orientations(t) if is_homogeneous(t, x))
cls = classify(t, tau)
print(f"homogeneous bits {''.join(map(str, tau.bits))}:")
print(f"  type-I vertices: {sorted(cls.type_i_vertices)}")
print(f"  directed edges:  {sorted(cls.edge_directions.values())}")
