"""Gluing surgery on special pairs of type-II edges.

A special pair in a z-knotted homogeneous triangulation is a pair of type-II
edges e1, e2 sharing one vertex v whose four occurrences interleave along
the single zigzag (e1 .. e2 .. e1 .. e2).  Splitting v into v+ and v- and
cutting e1, e2 opens a quadrilateral hole; gluing a second triangulation
opened the same way along a matching pair produces a bigger triangulation
whose single zigzag is predicted exactly by reassembling the cut segments.

Sides: the link cycle of v is divided by the far endpoints v1, v2 into two
arcs, and each face at v lies on one arc.  A +/- labeling of the four faces
containing e1 or e2 is admissible when the two minus faces lie on one arc,
the two plus faces on the other, and the single zigzag's face shadow reads
F1-,F1+ ... F2-,F2+ ... F1+,F1- ... F2+,F2-.  Ties between the two
admissible labelings are broken toward the lexicographically smaller pair
of minus faces.

All glue outputs are verified rather than trusted: the glued face list is
re-validated, its zigzag census re-enumerated, and the result compared with
the predicted sequence; any mismatch is an assertion failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import (
    Pass,
    Zigzag,
    ZOrientation,
    classify,
    enumerate_zigzags,
    face_shadow,
    is_homogeneous,
    make_pass,
)
from .triangulation import Triangulation, edge_key, face_key

__all__ = [
    "SurgeryError",
    "SpecialPair",
    "PiecePair",
    "SegmentDecomposition",
    "GluingSite",
    "find_special_pairs",
    "are_concordant",
    "find_piece_pairs",
    "resolve_site",
    "check_compatibility",
    "predict_glued_zigzag",
    "glue",
    "inherited_pairs",
]

Edge = tuple[str, str]

HOST = "host"
TWO_ZIGZAG = "two_zigzag_piece"
FOUR_ZIGZAG = "four_zigzag_piece"


class SurgeryError(ValueError):
    """A gluing precondition does not hold."""


@dataclass(frozen=True)
class SpecialPair:
    """An ordered pair of edges sharing one vertex.

    The order (e1, e2) matters for gluing compatibility; swapped() gives the
    other role assignment of the same unordered pair.
    """

    e1: Edge
    e2: Edge
    shared_vertex: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "e1", edge_key(*self.e1))
        object.__setattr__(self, "e2", edge_key(*self.e2))
        shared = set(self.e1) & set(self.e2)
        if shared != {self.shared_vertex}:
            raise SurgeryError(
                f"edges {self.e1} and {self.e2} do not share exactly the vertex "
                f"{self.shared_vertex!r}"
            )

    @property
    def v1(self) -> str:
        """Endpoint of e1 away from the shared vertex."""
        return self.e1[0] if self.e1[1] == self.shared_vertex else self.e1[1]

    @property
    def v2(self) -> str:
        """Endpoint of e2 away from the shared vertex."""
        return self.e2[0] if self.e2[1] == self.shared_vertex else self.e2[1]

    def edges(self) -> frozenset[Edge]:
        return frozenset((self.e1, self.e2))

    def swapped(self) -> "SpecialPair":
        return SpecialPair(self.e2, self.e1, self.shared_vertex)


@dataclass(frozen=True)
class PiecePair(SpecialPair):
    """A piece-side pair together with the occurrence pattern it matched."""

    kind: str = TWO_ZIGZAG


@dataclass(frozen=True)
class SegmentDecomposition:
    """The zigzag segments cut out by a pair's occurrences.

    Keys are "1+", "1-", "2+", "2-".  For a host they are the four arcs of
    the single zigzag between consecutive pair occurrences; for a
    two-zigzag piece the arcs between the two occurrences of each edge in
    its own zigzag; for a four-zigzag piece each segment is a whole zigzag
    with the pair edge's single pass removed.
    """

    kind: str
    segments: dict[str, tuple[Pass, ...]]

    def __getitem__(self, key: str) -> tuple[Pass, ...]:
        return self.segments[key]


@dataclass(frozen=True, eq=False)
class GluingSite:
    """A resolved pair: labels, sides, directions, and cut segments."""

    triangulation: Triangulation
    orientation: ZOrientation
    pair: SpecialPair
    kind: str
    face_labels: dict[tuple[str, str, str], str]  # the four faces at e1/e2 -> "+"/"-"
    vertex_sides: dict[str, str]  # link interior vertex -> "+"/"-"
    e1_direction: tuple[str, str]
    e2_direction: tuple[str, str]
    segments: SegmentDecomposition

    @property
    def v(self) -> str:
        return self.pair.shared_vertex

    @property
    def v1(self) -> str:
        return self.pair.v1

    @property
    def v2(self) -> str:
        return self.pair.v2

    def enters(self, index: int) -> bool:
        """Does e1 (index 1) or e2 (index 2) point into the shared vertex?"""
        direction = self.e1_direction if index == 1 else self.e2_direction
        return direction[1] == self.v


# ----------------------------------------------------------------------
# finding pairs


def _interleaved(p: tuple[int, int], q: tuple[int, int]) -> bool:
    # cyclic order p1 q p2 q: exactly one q-occurrence inside (p1, p2)
    inside = sum(1 for x in q if p[0] < x < p[1])
    return inside == 1


def find_special_pairs(t: Triangulation, tau: ZOrientation) -> tuple[SpecialPair, ...]:
    """All special pairs, each emitted once in its resolvable role order.

    The +/- side condition singles out exactly one of the two role orders
    (e1, e2) and (e2, e1); the returned pairs use that order, so each of
    them is directly usable as a host gluing site.
    """
    if len(tau.zigzags) != 1:
        raise SurgeryError("special pairs are defined for z-knotted triangulations")
    if not is_homogeneous(t, tau):
        raise SurgeryError("special pairs require a homogeneous z-orientation")
    cls = classify(t, tau)
    z = tau.chosen[0]
    type_ii = cls.type_ii_edges
    out = []
    for i, c1 in enumerate(type_ii):
        for c2 in type_ii[i + 1:]:
            shared = set(c1) & set(c2)
            if len(shared) != 1:
                continue
            if _interleaved(z.occurrences(c1), z.occurrences(c2)):
                pair = SpecialPair(c1, c2, next(iter(shared)))
                try:
                    resolve_site(t, tau, pair)
                except SurgeryError:
                    pair = pair.swapped()
                    resolve_site(t, tau, pair)  # exactly one role order resolves
                out.append(pair)
    return tuple(out)


def are_concordant(
    t: Triangulation, tau: ZOrientation, p: SpecialPair, q: SpecialPair
) -> bool:
    """Do two edge-disjoint special pairs alternate p,q,p,q,... along the zigzag?"""
    if len(tau.zigzags) != 1:
        raise SurgeryError("concordance is defined for z-knotted triangulations")
    if p.edges() & q.edges():
        raise SurgeryError("concordance requires edge-disjoint pairs")
    z = tau.chosen[0]
    marks = []
    for edge, label in ((p.e1, "p"), (p.e2, "p"), (q.e1, "q"), (q.e2, "q")):
        for pos in z.occurrences(edge):
            marks.append((pos, label))
    assert len(marks) == 8, "each pair edge is passed exactly twice"
    marks.sort()
    return all(marks[i][1] != marks[(i + 1) % 8][1] for i in range(8))


def find_piece_pairs(t: Triangulation, tau: ZOrientation) -> tuple[PiecePair, ...]:
    """Vertex-sharing type-II pairs matching a piece occurrence pattern.

    Two-zigzag pattern: e1 occurs twice in one chosen zigzag and e2 twice in
    another.  Four-zigzag pattern: e1 occurs once in each of two zigzags and
    e2 once in each of the other two.
    """
    if len(tau.zigzags) not in (2, 4):
        raise SurgeryError("piece pairs require exactly two or four zigzags")
    if not is_homogeneous(t, tau):
        raise SurgeryError("piece pairs require a homogeneous z-orientation")
    cls = classify(t, tau)
    type_ii = cls.type_ii_edges
    hits: dict[Edge, dict[int, int]] = {}
    for e in type_ii:
        hits[e] = {}
        for i, z in enumerate(tau.chosen):
            n = len(z.occurrences(e))
            if n:
                hits[e][i] = n
    out = []
    for i, c1 in enumerate(type_ii):
        for c2 in type_ii[i + 1:]:
            if len(set(c1) & set(c2)) != 1:
                continue
            shared = next(iter(set(c1) & set(c2)))
            h1, h2 = hits[c1], hits[c2]
            if len(tau.chosen) == 2:
                if set(h1.values()) == {2} and set(h2.values()) == {2} and h1.keys() != h2.keys():
                    out.append(PiecePair(c1, c2, shared, kind=TWO_ZIGZAG))
            else:
                ok = (
                    set(h1.values()) == {1}
                    and set(h2.values()) == {1}
                    and len(h1) == len(h2) == 2
                    and not (h1.keys() & h2.keys())
                )
                if ok:
                    out.append(PiecePair(c1, c2, shared, kind=FOUR_ZIGZAG))
    return tuple(out)


# ----------------------------------------------------------------------
# resolving a site


def _link_sides(t: Triangulation, pair: SpecialPair) -> tuple[list[str], list[str]]:
    """Interior vertices of the two link arcs of the shared vertex.

    The link cycle of v is cut at v1 and v2; the result is (arc after v1 up
    to v2, arc after v2 up to v1), interiors only.  v1 and v2 adjacent in
    the link would mean a face containing both pair edges, which cannot
    happen when every face has exactly one type-II edge.
    """
    link = t.vertex_link(pair.shared_vertex)
    cyc = link.cycle
    n = len(cyc)
    i1 = cyc.index(pair.v1)
    i2 = cyc.index(pair.v2)
    arc_a = [cyc[(i1 + k) % n] for k in range(1, (i2 - i1) % n)]
    arc_b = [cyc[(i2 + k) % n] for k in range(1, (i1 - i2) % n)]
    if not arc_a or not arc_b:
        raise SurgeryError(
            f"pair edges {pair.e1} and {pair.e2} bound a common face at "
            f"{pair.shared_vertex!r}"
        )
    return arc_a, arc_b


def _face_side(face, pair: SpecialPair, side_of: dict[str, str]) -> str:
    interior = [w for w in face if w not in (pair.shared_vertex, pair.v1, pair.v2)]
    sides = {side_of[w] for w in interior}
    assert len(sides) == 1, f"face {face!r} straddles the link arcs"
    return next(iter(sides))


def _occurrence_reading(shadow, z: Zigzag, edge: Edge, pos: int):
    n = len(z)
    return (shadow[(pos - 1) % n], shadow[pos])


def resolve_site(t: Triangulation, tau: ZOrientation, pair: SpecialPair) -> GluingSite:
    """Label the pair's faces, split the link into sides, and cut segments.

    The site kind is inferred from the zigzag census: one zigzag makes a
    host, two or four make a piece.  Raises SurgeryError when the pair does
    not show the occurrence pattern its kind requires.
    """
    t.require_valid()
    if not is_homogeneous(t, tau):
        raise SurgeryError("gluing sites require a homogeneous z-orientation")
    cls = classify(t, tau)
    for e in (pair.e1, pair.e2):
        if cls.edge_types.get(e) != "II":
            raise SurgeryError(f"pair edge {e} is not type II")
    if isinstance(pair, PiecePair):
        expected = {2: TWO_ZIGZAG, 4: FOUR_ZIGZAG}.get(len(tau.zigzags))
        if pair.kind != expected:
            raise SurgeryError(f"pair kind {pair.kind!r} does not match the census")

    k = len(tau.zigzags)
    if k == 1:
        return _resolve_host(t, tau, pair, cls)
    if k == 2:
        return _resolve_two_piece(t, tau, pair, cls)
    if k == 4:
        return _resolve_four_piece(t, tau, pair, cls)
    raise SurgeryError(f"no site kind for a census of {k} zigzags")


def _sides_and_faces(t, pair, cls):
    arc_a, arc_b = _link_sides(t, pair)
    f1a, f1b = t.edge_faces(pair.e1)
    f2a, f2b = t.edge_faces(pair.e2)
    assert len({f1a, f1b, f2a, f2b}) == 4, "pair faces must be distinct"
    side_of = {w: "A" for w in arc_a}
    side_of.update({w: "B" for w in arc_b})
    face_side = {f: _face_side(f, pair, side_of) for f in (f1a, f1b, f2a, f2b)}
    # each pair edge sees one face on each arc
    assert face_side[f1a] != face_side[f1b]
    assert face_side[f2a] != face_side[f2b]
    return side_of, (f1a, f1b), (f2a, f2b), face_side


def _choose_minus_side(faces1, faces2, face_side, admissible_sides) -> dict:
    """Pick the minus side among admissible ones; return face labels."""
    if not admissible_sides:
        raise SurgeryError("no +/- labeling is consistent with the side condition")
    best = None
    for side in sorted(admissible_sides):
        minus = tuple(sorted(f for f in (*faces1, *faces2) if face_side[f] == side))
        if best is None or minus < best[1]:
            best = (side, minus)
    minus_side = best[0]
    labels = {}
    for f in (*faces1, *faces2):
        labels[f] = "-" if face_side[f] == minus_side else "+"
    return labels


def _segment(z: Zigzag, start: int, stop: int) -> tuple[Pass, ...]:
    """Passes strictly between positions start and stop, cyclically."""
    n = len(z)
    out = []
    i = (start + 1) % n
    while i != stop:
        out.append(z.passes[i])
        i = (i + 1) % n
    return tuple(out)


def _resolve_host(t, tau, pair, cls) -> GluingSite:
    z = tau.chosen[0]
    occ1 = z.occurrences(pair.e1)
    occ2 = z.occurrences(pair.e2)
    assert len(occ1) == 2 and len(occ2) == 2
    if not _interleaved(occ1, occ2):
        raise SurgeryError(
            f"occurrences of {pair.e1} and {pair.e2} do not interleave; not a special pair"
        )
    shadow = face_shadow(t, z)
    side_of, faces1, faces2, face_side = _sides_and_faces(t, pair, cls)

    candidates = []
    for p1 in occ1:
        f1_minus, f1_plus = _occurrence_reading(shadow, z, pair.e1, p1)
        q1 = min(occ2, key=lambda q: (q - p1) % len(z))
        f2_minus, f2_plus = _occurrence_reading(shadow, z, pair.e2, q1)
        if face_side[f1_minus] == face_side[f2_minus] and face_side[f1_plus] == face_side[f2_plus]:
            candidates.append((p1, q1, f1_minus, f1_plus, f2_minus, f2_plus))
    if not candidates:
        raise SurgeryError("no +/- labeling is consistent with the side condition")
    candidates.sort(key=lambda c: tuple(sorted((c[2], c[4]))))
    p1, q1, f1m, f1p, f2m, f2p = candidates[0]
    p2 = occ1[0] if occ1[1] == p1 else occ1[1]
    q2 = occ2[0] if occ2[1] == q1 else occ2[1]

    # the full shadow pattern F1-,F1+ ... F2-,F2+ ... F1+,F1- ... F2+,F2-
    assert _occurrence_reading(shadow, z, pair.e1, p2) == (f1p, f1m)
    assert _occurrence_reading(shadow, z, pair.e2, q2) == (f2p, f2m)
    assert (q1 - p1) % len(z) < (p2 - p1) % len(z) < (q2 - p1) % len(z)

    face_labels = {f1m: "-", f1p: "+", f2m: "-", f2p: "+"}
    minus_side = face_side[f1m]
    vertex_sides = {w: ("-" if s == minus_side else "+") for w, s in side_of.items()}

    segments = SegmentDecomposition(
        HOST,
        {
            "1+": _segment(z, p1, q1),
            "2+": _segment(z, q1, p2),
            "1-": _segment(z, p2, q2),
            "2-": _segment(z, q2, p1),
        },
    )
    assert all(segments[k] for k in ("1+", "2+", "1-", "2-")), "segments are never empty"
    return GluingSite(
        t, tau, pair, HOST, face_labels, vertex_sides,
        cls.edge_directions[pair.e1], cls.edge_directions[pair.e2], segments,
    )


def _piece_labels(t, pair, cls):
    side_of, faces1, faces2, face_side = _sides_and_faces(t, pair, cls)
    # both global labelings satisfy the side condition; tie-break on minus faces
    face_labels = _choose_minus_side(faces1, faces2, face_side, {"A", "B"})
    minus_side = face_side[[f for f, lab in face_labels.items() if lab == "-"][0]]
    vertex_sides = {w: ("-" if s == minus_side else "+") for w, s in side_of.items()}
    return face_labels, vertex_sides


def _resolve_two_piece(t, tau, pair, cls) -> GluingSite:
    zig_of: dict[Edge, Zigzag] = {}
    for e in (pair.e1, pair.e2):
        holders = [z for z in tau.chosen if z.occurrences(e)]
        if len(holders) != 1 or len(holders[0].occurrences(e)) != 2:
            raise SurgeryError(
                f"edge {e} does not occur twice in a single zigzag; "
                "not a two-zigzag piece pair"
            )
        zig_of[e] = holders[0]
    if zig_of[pair.e1] == zig_of[pair.e2]:
        raise SurgeryError("pair edges must occur in distinct zigzags")

    face_labels, vertex_sides = _piece_labels(t, pair, cls)
    segs: dict[str, tuple[Pass, ...]] = {}
    for idx, e in ((1, pair.e1), (2, pair.e2)):
        z = zig_of[e]
        shadow = face_shadow(t, z)
        r1, r2 = z.occurrences(e)
        plus_face = [f for f in t.edge_faces(e) if face_labels[f] == "+"][0]
        anchored = [r for r in (r1, r2) if shadow[r] == plus_face]
        if len(anchored) != 1:
            raise SurgeryError(f"occurrences of {e} do not cross its faces oppositely")
        a = anchored[0]
        b = r1 if r2 == a else r2
        segs[f"{idx}+"] = _segment(z, a, b)
        segs[f"{idx}-"] = _segment(z, b, a)
        assert segs[f"{idx}+"] and segs[f"{idx}-"]
    return GluingSite(
        t, tau, pair, TWO_ZIGZAG, face_labels, vertex_sides,
        cls.edge_directions[pair.e1], cls.edge_directions[pair.e2],
        SegmentDecomposition(TWO_ZIGZAG, segs),
    )


def _resolve_four_piece(t, tau, pair, cls) -> GluingSite:
    holders: dict[Edge, list[Zigzag]] = {}
    for e in (pair.e1, pair.e2):
        holders[e] = [z for z in tau.chosen if z.occurrences(e)]
        if len(holders[e]) != 2 or any(len(z.occurrences(e)) != 1 for z in holders[e]):
            raise SurgeryError(
                f"edge {e} does not occur once in each of two zigzags; "
                "not a four-zigzag piece pair"
            )
    if set(map(id, holders[pair.e1])) & set(map(id, holders[pair.e2])):
        raise SurgeryError("pair edges must occur in disjoint zigzag pairs")

    face_labels, vertex_sides = _piece_labels(t, pair, cls)
    segs: dict[str, tuple[Pass, ...]] = {}
    for idx, e in ((1, pair.e1), (2, pair.e2)):
        plus_face = [f for f in t.edge_faces(e) if face_labels[f] == "+"][0]
        by_sign: dict[str, tuple[Pass, ...]] = {}
        for z in holders[e]:
            shadow = face_shadow(t, z)
            (r,) = z.occurrences(e)
            sign = "+" if shadow[r] == plus_face else "-"
            # whole zigzag with the single pass of e removed
            by_sign[sign] = _segment(z, r, r)
        if set(by_sign) != {"+", "-"}:
            raise SurgeryError(f"zigzags through {e} do not cross its faces oppositely")
        segs[f"{idx}+"] = by_sign["+"]
        segs[f"{idx}-"] = by_sign["-"]
    return GluingSite(
        t, tau, pair, FOUR_ZIGZAG, face_labels, vertex_sides,
        cls.edge_directions[pair.e1], cls.edge_directions[pair.e2],
        SegmentDecomposition(FOUR_ZIGZAG, segs),
    )


# ----------------------------------------------------------------------
# gluing


def check_compatibility(host_site: GluingSite, piece_site: GluingSite) -> bool:
    """Each split edge must point the same way at the shared vertex on both sides."""
    if host_site.kind != HOST:
        raise SurgeryError("first argument must be a host site")
    if piece_site.kind not in (TWO_ZIGZAG, FOUR_ZIGZAG):
        raise SurgeryError("second argument must be a piece site")
    return host_site.enters(1) == piece_site.enters(1) and host_site.enters(2) == piece_site.enters(2)


def _split_names(host_site: GluingSite, piece_site: GluingSite) -> tuple[str, str]:
    plus, minus = host_site.v + "+", host_site.v + "-"
    taken = set(host_site.triangulation.vertices) | set(piece_site.triangulation.vertices)
    if plus in taken or minus in taken:
        raise SurgeryError(f"split vertex names {plus!r}/{minus!r} collide with existing vertices")
    return plus, minus


def _site_vertex_map(site: GluingSite, plus: str, minus: str, renames: dict[str, str]):
    """Rewrite one vertex of a pass or edge under the split and identification."""
    v = site.v

    def sub(u: str, other: str) -> str:
        if u == v:
            side = site.vertex_sides[other]
            return plus if side == "+" else minus
        return renames.get(u, u)

    return sub


def _rewrite_pass(p: Pass, sub) -> Pass:
    return make_pass(sub(p.src, p.dst), sub(p.dst, p.src))


def _rewrite_edge(e: Edge, sub) -> Edge:
    return edge_key(sub(e[0], e[1]), sub(e[1], e[0]))


def _split_edge_pass(site: GluingSite, index: int, sign: str, plus: str, minus: str) -> Pass:
    """The pass of e1/e2's split copy, directed like the original edge."""
    direction = site.e1_direction if index == 1 else site.e2_direction
    name = plus if sign == "+" else minus
    src, dst = (name if x == site.v else x for x in direction)
    return make_pass(src, dst)


def predict_glued_zigzag(host_site: GluingSite, piece_site: GluingSite) -> Zigzag:
    """Assemble the glued zigzag from the cut segments.

    With host segments A and two-zigzag piece segments B the glued walk is
    e1+, A1+, e2-, B2-, e2-, A2-, e1-, B1-, e1-, A1-, e2+, B2+, e2+, A2+,
    e1+, B1+.  With four-zigzag piece segments C it is e1+, A1+, e2-, C2-,
    e2+, A2+, e1+, C1+, e1-, A1-, e2+, C2+, e2-, A2-, e1-, C1-.
    """
    plus, minus = _split_names(host_site, piece_site)
    hsub = _site_vertex_map(host_site, plus, minus, {})
    psub = _site_vertex_map(
        piece_site, plus, minus,
        {piece_site.v1: host_site.v1, piece_site.v2: host_site.v2},
    )
    A = {k: tuple(_rewrite_pass(p, hsub) for p in host_site.segments[k])
         for k in ("1+", "1-", "2+", "2-")}
    B = {k: tuple(_rewrite_pass(p, psub) for p in piece_site.segments[k])
         for k in ("1+", "1-", "2+", "2-")}

    def e(index: int, sign: str) -> tuple[Pass, ...]:
        return (_split_edge_pass(host_site, index, sign, plus, minus),)

    if piece_site.kind == TWO_ZIGZAG:
        seq = (
            e(1, "+") + A["1+"] + e(2, "-") + B["2-"] + e(2, "-") + A["2-"]
            + e(1, "-") + B["1-"] + e(1, "-") + A["1-"] + e(2, "+") + B["2+"]
            + e(2, "+") + A["2+"] + e(1, "+") + B["1+"]
        )
    else:
        seq = (
            e(1, "+") + A["1+"] + e(2, "-") + B["2-"] + e(2, "+") + A["2+"]
            + e(1, "+") + B["1+"] + e(1, "-") + A["1-"] + e(2, "+") + B["2+"]
            + e(2, "-") + A["2-"] + e(1, "-") + B["1-"]
        )
    return Zigzag(seq)


def _rewrite_faces(site: GluingSite, plus: str, minus: str, renames: dict[str, str]):
    sub = _site_vertex_map(site, plus, minus, renames)
    out = []
    for f in site.triangulation.faces:
        if site.v in f:
            x, y = (w for w in f if w != site.v)
            interior = [w for w in (x, y) if w in site.vertex_sides]
            assert interior, "a face at v has an interior link vertex"
            side = site.vertex_sides[interior[0]]
            name = plus if side == "+" else minus
            out.append(face_key(name, renames.get(x, x), renames.get(y, y)))
        else:
            out.append(face_key(*(renames.get(w, w) for w in f)))
    # face labels and sides must agree where both are defined
    for f, lab in site.face_labels.items():
        x, y = (w for w in f if w != site.v)
        interior = [w for w in (x, y) if w in site.vertex_sides]
        assert site.vertex_sides[interior[0]] == lab
    return out, sub


def glue(
    host: tuple[Triangulation, ZOrientation],
    host_site: GluingSite,
    piece: tuple[Triangulation, ZOrientation],
    piece_site: GluingSite,
) -> tuple[Triangulation, ZOrientation]:
    """Glue a piece into a host along resolved sites; returns the result
    with its single zigzag oriented as predicted.

    The host must be z-knotted and homogeneous with a resolved special
    pair; the piece homogeneous with a resolved piece pair; directions must
    match at the shared vertices and the vertex namespaces must be disjoint.
    """
    th, _tauh = host
    tp, _taup = piece
    if host_site.triangulation != th or piece_site.triangulation != tp:
        raise SurgeryError("sites do not belong to the given triangulations")
    if host_site.kind != HOST:
        raise SurgeryError("host site must come from a z-knotted triangulation")
    if piece_site.kind not in (TWO_ZIGZAG, FOUR_ZIGZAG):
        raise SurgeryError("piece site must come from a two- or four-zigzag triangulation")
    if not check_compatibility(host_site, piece_site):
        raise SurgeryError("pair directions at the shared vertices do not match")
    if set(th.vertices) & set(tp.vertices):
        raise SurgeryError("host and piece vertex namespaces must be disjoint")

    plus, minus = _split_names(host_site, piece_site)
    host_faces, _ = _rewrite_faces(host_site, plus, minus, {})
    piece_faces, _ = _rewrite_faces(
        piece_site, plus, minus,
        {piece_site.v1: host_site.v1, piece_site.v2: host_site.v2},
    )
    glued = Triangulation(host_faces + piece_faces)
    assert glued.validate().ok, "glued face list is a closed surface triangulation"

    assert len(glued.vertices) == len(th.vertices) + len(tp.vertices) - 2
    assert len(glued.edges) == len(th.edges) + len(tp.edges)
    assert len(glued.faces) == len(th.faces) + len(tp.faces)

    predicted = predict_glued_zigzag(host_site, piece_site)
    zs = enumerate_zigzags(glued)
    assert len(zs) == 1, "gluing along a special pair yields a z-knotted triangulation"
    assert zs[0] == predicted.canonical(), "enumerated zigzag matches the prediction"
    tau = ZOrientation(zs, (0,) if zs[0] == predicted else (1,))

    assert is_homogeneous(glued, tau), "glued orientation is homogeneous"
    cls = classify(glued, tau)
    host_cls = classify(th, host[1])
    piece_cls = classify(tp, piece[1])
    assert set(cls.type_i_vertices) == set(host_cls.type_i_vertices) | set(
        piece_cls.type_i_vertices
    ), "type-I vertices are preserved by gluing"
    return glued, tau


# ----------------------------------------------------------------------
# survival of other pairs


def _edge_in_segments(seg: SegmentDecomposition, edge: Edge, index: int) -> bool:
    key_p, key_m = f"{index}+", f"{index}-"
    in_p = any(p.edge == edge for p in seg[key_p])
    in_m = any(p.edge == edge for p in seg[key_m])
    return in_p and in_m


def inherited_pairs(
    glued: tuple[Triangulation, ZOrientation],
    host_site: GluingSite,
    piece_site: GluingSite,
    host_pairs=(),
    piece_pairs=(),
) -> tuple[SpecialPair, ...]:
    """Re-express pairs that survive the gluing, in glued vertex names.

    A host pair survives when it is edge-disjoint from the used pair and,
    in some role order, its first edge lies in both A1 segments and its
    second in both A2 segments (this is concordance with the used pair
    written in segment terms).  A piece pair survives when each edge lies
    in both same-index piece segments.  Input pairs are given in the
    original (pre-glue) names; every survivor is re-verified as special in
    the glued zigzag.
    """
    t, tau = glued
    assert len(tau.zigzags) == 1
    cls = classify(t, tau)
    z = tau.chosen[0]
    plus, minus = host_site.v + "+", host_site.v + "-"

    def survivors(site: GluingSite, pairs, renames):
        sub = _site_vertex_map(site, plus, minus, renames)
        out = []
        for pair in pairs:
            if pair.edges() & site.pair.edges():
                continue
            if _edge_in_segments(site.segments, pair.e1, 1) and _edge_in_segments(
                site.segments, pair.e2, 2
            ):
                ordered = (pair.e1, pair.e2)
            elif _edge_in_segments(site.segments, pair.e2, 1) and _edge_in_segments(
                site.segments, pair.e1, 2
            ):
                ordered = (pair.e2, pair.e1)
            else:
                continue
            new_e1 = _rewrite_edge(ordered[0], sub)
            new_e2 = _rewrite_edge(ordered[1], sub)
            shared = set(new_e1) & set(new_e2)
            assert len(shared) == 1, "surviving pair still shares one vertex"
            new_pair = SpecialPair(new_e1, new_e2, next(iter(shared)))
            for e in (new_e1, new_e2):
                assert cls.edge_types[e] == "II"
            assert _interleaved(z.occurrences(new_e1), z.occurrences(new_e2)), (
                "surviving pair is special in the glued zigzag"
            )
            out.append(new_pair)
        return out

    found = survivors(host_site, host_pairs, {})
    found += survivors(
        piece_site, piece_pairs,
        {piece_site.v1: host_site.v1, piece_site.v2: host_site.v2},
    )
    return tuple(sorted(found, key=lambda p: (p.e1, p.e2)))
