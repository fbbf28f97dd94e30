"""Core triangulation structure, validation, and the .tri format."""

from __future__ import annotations

import pytest

from zigzags import (
    ParseError,
    Triangulation,
    TriangulationError,
    bipyramid,
    edge_key,
    face_key,
    parse_triangulation,
    platonic,
    serialize_triangulation,
)

TET = [("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4"), ("2", "3", "4")]


def test_edge_key_sorts():
    assert edge_key("b", "a") == ("a", "b")
    with pytest.raises(TriangulationError):
        edge_key("a", "a")


def test_face_key_sorts():
    assert face_key("c", "a", "b") == ("a", "b", "c")
    with pytest.raises(TriangulationError):
        face_key("a", "b", "a")


def test_basic_accessors():
    t = Triangulation(TET)
    assert t.vertices == ("1", "2", "3", "4")
    assert len(t.edges) == 6
    assert len(t.faces) == 4
    assert t.degree("1") == 3
    assert t.neighbors("1") == ("2", "3", "4")
    assert t.has_face(("3", "2", "1"))
    assert not t.has_face(("1", "2", "x"))
    assert t.euler_characteristic() == 2


def test_face_order_preserved():
    faces = [("2", "1", "3"), ("4", "1", "2"), ("1", "3", "4"), ("2", "3", "4")]
    t = Triangulation(faces)
    # stored as sorted triples, in the given order
    assert t.faces == (("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4"), ("2", "3", "4"))


def test_duplicate_face_rejected():
    with pytest.raises(TriangulationError, match="duplicate face"):
        Triangulation(TET + [("3", "2", "1")])


def test_repeated_vertex_rejected():
    with pytest.raises(TriangulationError):
        Triangulation([("1", "1", "2")])


def test_edge_and_vertex_faces():
    t = Triangulation(TET)
    assert t.edge_faces(("1", "2")) == (("1", "2", "3"), ("1", "2", "4"))
    assert len(t.vertex_faces("4")) == 3
    with pytest.raises(TriangulationError):
        t.edge_faces(("1", "x"))


def test_common_and_other_face():
    t = Triangulation(TET)
    assert t.common_face(("1", "2"), ("2", "3")) == ("1", "2", "3")
    assert t.other_face(("1", "2"), ("1", "2", "3")) == ("1", "2", "4")
    with pytest.raises(TriangulationError):
        t.common_face(("1", "2"), ("3", "4"))  # opposite edges share no face


def test_vertex_link_cycle():
    t = bipyramid(4)
    link = t.vertex_link("a")
    assert set(link.cycle) == {"1", "2", "3", "4"}
    assert len(link) == 4
    # base vertex link alternates neighbors and apexes
    link1 = t.vertex_link("1")
    assert set(link1.cycle) == {"2", "4", "a", "b"}
    assert len(link1.edges()) == 4


def test_link_deterministic():
    t = bipyramid(5)
    assert t.vertex_link("3").cycle == t.vertex_link("3").cycle
    assert t.vertex_link("a").cycle[0] == min(t.neighbors("a"))


def test_validate_ok():
    for t in (Triangulation(TET), bipyramid(3), bipyramid(8), platonic("icosahedron")):
        report = t.validate()
        assert report.ok, report
        t.require_valid()


def test_validate_open_surface():
    t = Triangulation([("1", "2", "3")])
    report = t.validate()
    assert not report.ok
    assert any("expected 2" in v for v in report.violations)


def test_validate_disconnected():
    far = [(f"x{a}", f"x{b}", f"x{c}") for a, b, c in TET]
    report = Triangulation(TET + far).validate()
    assert not report.ok
    assert any("disconnected" in v for v in report.violations)


def test_validate_pinched_vertex():
    # two tetrahedra sharing exactly one vertex: every edge is fine but the
    # shared vertex has two link cycles
    second = [tuple("x" if w == "1" else w + "'" for w in f) for f in TET]
    t = Triangulation([tuple("x" if w == "1" else w for w in f) for f in TET] + second)
    report = t.validate()
    assert not report.ok
    assert any("link of vertex x" in v for v in report.violations)


def test_require_valid_raises():
    with pytest.raises(TriangulationError, match="invalid triangulation"):
        Triangulation([("1", "2", "3")]).require_valid()


def test_equality_and_hash():
    a = Triangulation(TET)
    b = Triangulation([tuple(reversed(f)) for f in TET])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Triangulation(TET[:3] + [("2", "3", "5"), ("2", "4", "5"), ("3", "4", "5")])


def test_parse_basic():
    text = "# a tetrahedron\nf 1 2 3\nf 1 2 4\n\nf 1 3 4  # inline comment\nf 2 3 4\n"
    t = parse_triangulation(text)
    assert t == Triangulation(TET)


def test_parse_errors_name_lines():
    with pytest.raises(ParseError, match="line 2"):
        parse_triangulation("f 1 2 3\nf 1 2\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_triangulation("g 1 2 3\n")
    with pytest.raises(ParseError, match="repeated vertex"):
        parse_triangulation("f 1 1 2\n")
    with pytest.raises(ParseError, match="duplicate face"):
        parse_triangulation("f 1 2 3\nf 3 2 1\n")


def test_serialize_round_trip():
    for t in (Triangulation(TET), bipyramid(6), platonic("icosahedron")):
        assert parse_triangulation(serialize_triangulation(t)) == t


def test_serialize_deterministic():
    t = bipyramid(5)
    assert serialize_triangulation(t) == serialize_triangulation(bipyramid(5))


def test_token_rules():
    with pytest.raises(TriangulationError):
        Triangulation([("a b", "c", "d")])
    with pytest.raises(TriangulationError):
        Triangulation([("a#1", "c", "d")])
    with pytest.raises(TriangulationError):
        Triangulation([("", "c", "d")])
