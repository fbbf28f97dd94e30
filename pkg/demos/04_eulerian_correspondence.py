"""Homogeneous orientations correspond to directed Eulerian embeddings.

Deleting the type-I vertices of a homogeneous z-orientation leaves a
directed graph whose arcs are the type-II edges; the links of the deleted
vertices become closed directed face cycles covering each arc twice.
Coning a vertex back into every face cycle inverts the construction.
"""

from zigzags import (
    DirectedEmbedding,
    bipyramid,
    bipyramid_canonical_zorientation,
    extract_directed_embedding,
    round_trip_check,
    serialize_embedding,
    triangulate_embedding,
)

t = bipyramid(5)
tau = bipyramid_canonical_zorientation(5)
emb = extract_directed_embedding(t, tau)
print("embedding extracted from the 5-gonal bipyramid:")
print(serialize_embedding(emb))
print(f"round trip recovers the bipyramid: {round_trip_check(t, tau)}")
print()

# the smallest case, built by hand: a directed triangle with two faces
arcs = (("1", "2"), ("2", "3"), ("3", "1"))
triangle = DirectedEmbedding(("1", "2", "3"), arcs, (("a", arcs), ("b", arcs)))
coned, coned_tau = triangulate_embedding(triangle)
print("coning the directed triangle (two face cycles):")
print(f"  V={len(coned.vertices)} E={len(coned.edges)} F={len(coned.faces)}")
print(f"  same faces as the 3-gonal bipyramid: {set(coned.faces) == set(bipyramid(3).faces)}")
