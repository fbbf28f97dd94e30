"""The zigzag census of bipyramids is periodic in n mod 4.

An n-gonal bipyramid (two cones over an n-cycle) has one zigzag when n is
odd, two when n = 2 mod 4, and four when n = 0 mod 4.  A triangulation
with a single zigzag is called z-knotted.
"""

from zigzags import bipyramid, enumerate_zigzags, is_z_knotted

print(" n | zigzags | lengths          | z-knotted")
print("---+---------+------------------+----------")
for n in range(3, 13):
    t = bipyramid(n)
    zs = enumerate_zigzags(t)
    lengths = ",".join(str(len(z)) for z in zs)
    knotted = "yes" if is_z_knotted(t) else "no"
    print(f"{n:2d} | {len(zs):7d} | {lengths:16s} | {knotted}")
