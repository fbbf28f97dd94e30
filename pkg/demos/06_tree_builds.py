"""Build arbitrarily large z-knotted spheres from labeled trees.

Each tree node becomes a bipyramid (odd label 2k+1 at the root, even
label 2k elsewhere) and each tree edge one gluing.  The result is always
a z-knotted homogeneous sphere with two type-I vertices per node, so the
construction scales to any size.
"""

from zigzags import TreeSpec, classify, is_z_knotted, tree_build

spec = TreeSpec(
    (("r", 5), ("x", 4), ("y", 6)),
    (("r", "x"), ("r", "y")),
)
print("tree: root r (label 5) with children x (4) and y (6)")
t, tau, log = tree_build(spec)
print(log)
print(f"result: V={len(t.vertices)} E={len(t.edges)} F={len(t.faces)}, "
      f"zigzag length {len(tau.chosen[0])}")
print()

# a deeper tree: a chain hanging off a hub
big = TreeSpec(
    (("hub", 9), ("a", 6), ("b", 8), ("c", 4), ("d", 6), ("e", 4)),
    (("hub", "a"), ("hub", "b"), ("hub", "c"), ("b", "d"), ("d", "e")),
)
t, tau, log = tree_build(big)
cls = classify(t, tau)
print("six-node tree:")
for record in log.records:
    print(f"  {record}")
print(f"result: V={len(t.vertices)} E={len(t.edges)} F={len(t.faces)}")
print(f"  z-knotted: {is_z_knotted(t)}, type-I vertices: {len(cls.type_i_vertices)}")
