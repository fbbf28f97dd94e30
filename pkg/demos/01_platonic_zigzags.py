"""Walk the zigzags of the platonic triangulations.

A zigzag alternates left and right turns across a triangulated surface
until it closes up.  The three platonic triangulations already show the
range of behaviors: a few short zigzags or several long ones.
"""

from zigzags import enumerate_zigzags, platonic

for name in ("tetrahedron", "octahedron", "icosahedron"):
    t = platonic(name)
    zs = enumerate_zigzags(t)
    print(f"{name}: V={len(t.vertices)} E={len(t.edges)} F={len(t.faces)}")
    print(f"  {len(zs)} zigzags, lengths {[len(z) for z in zs]}")
    z = zs[0]
    edges = " ".join("-".join(p.edge) for p in z.passes[:6])
    print(f"  first zigzag starts: {edges} ...")
    print()
