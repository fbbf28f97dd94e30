"""Zigzag dynamics, orientations, and classification, checked against the
independent brute-force walker in zigzag_oracle."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import zigzag_oracle as oracle
from helpers import sampled_orientations
from zigzags import (
    Triangulation,
    Zigzag,
    ZOrientation,
    all_z_orientations,
    bipyramid,
    classify,
    enumerate_zigzags,
    face_shadow,
    format_classification,
    format_zigzags,
    is_homogeneous,
    is_z_knotted,
    make_pass,
    make_z_orientation,
    platonic,
    zigzag_predecessor,
    zigzag_successor,
)

TET = Triangulation([("1", "2", "3"), ("1", "2", "4"), ("1", "3", "4"), ("2", "3", "4")])


# ----------------------------------------------------------------------
# Pass and Zigzag basics


def test_pass_ordering_fields():
    p = make_pass("2", "1")
    assert p.edge == ("1", "2")
    assert (p.src, p.dst) == ("2", "1")
    assert p.flipped() == make_pass("1", "2")
    assert str(p) == "2>1"


def test_zigzag_normalizes_rotation():
    ps = [make_pass("1", "2"), make_pass("2", "3"), make_pass("3", "1")]
    a = Zigzag(tuple(ps))
    b = Zigzag(tuple(ps[1:] + ps[:1]))
    assert a == b
    assert a.passes == b.passes


def test_zigzag_rejects_broken_chain():
    with pytest.raises(ValueError, match="do not chain"):
        Zigzag((make_pass("1", "2"), make_pass("3", "1"), make_pass("2", "3")))
    with pytest.raises(ValueError, match="at least one pass"):
        Zigzag(())


def test_zigzag_reverse_and_canonical():
    z = enumerate_zigzags(TET)[0]
    r = z.reverse()
    assert r.reverse() == z
    assert z.canonical() == r.canonical()
    assert z.is_canonical
    assert not (z.passes < r.passes) or z.canonical() == z


def test_occurrences_and_counts():
    z = enumerate_zigzags(bipyramid(3))[0]
    counts = z.edge_counts()
    assert set(counts.values()) == {2}  # double cover on a z-knotted instance
    e = next(iter(counts))
    occ = z.occurrences(e)
    assert len(occ) == 2 and all(z.passes[i].edge == e for i in occ)


# ----------------------------------------------------------------------
# successor dynamics


def test_successor_predecessor_inverse():
    t = bipyramid(5)
    states = []
    for f in t.faces:
        a, b, c = f
        states.append((tuple(sorted((a, b))), tuple(sorted((b, c)))))
    for s in states:
        assert zigzag_predecessor(t, zigzag_successor(t, s)) == s
        assert zigzag_successor(t, zigzag_predecessor(t, s)) == s


def test_successor_matches_oracle_step():
    # the oracle walks frozenset states; translate back and forth each step
    t = bipyramid(7)
    faces = [frozenset(f) for f in t.faces]
    s = (("1", "2"), ("2", "a"))
    for _ in range(50):
        o_prev, o_cur = oracle.step(faces, (frozenset(s[0]), frozenset(s[1])))
        expected = (tuple(sorted(o_prev)), tuple(sorted(o_cur)))
        got = zigzag_successor(t, s)
        assert got == expected
        s = got


# ----------------------------------------------------------------------
# enumeration against the oracle


@pytest.mark.parametrize("n", range(3, 13))
def test_bipyramid_census_matches_oracle(n, bipyramid_corpus):
    t, _ = bipyramid_corpus[n]
    lengths = sorted(len(z) for z in enumerate_zigzags(t))
    assert lengths == oracle.census([frozenset(f) for f in t.faces])


@pytest.mark.parametrize("name", ["tetrahedron", "octahedron", "icosahedron"])
def test_platonic_census_matches_oracle(name, platonic_corpus):
    t = platonic_corpus[name]
    lengths = sorted(len(z) for z in enumerate_zigzags(t))
    assert lengths == oracle.census([frozenset(f) for f in t.faces])


def test_orbits_cover_all_states():
    t = platonic("icosahedron")
    zs = enumerate_zigzags(t)
    assert sum(len(z) for z in zs) * 2 == 6 * len(t.faces)


def _state_pass(state):
    prev, cur = state
    (src,) = set(prev) & set(cur)
    (dst,) = set(cur) - {src}
    return make_pass(src, dst)


def test_zigzag_pass_sets_match_oracle():
    # beyond lengths: the actual pass sets agree with the oracle orbits
    t = bipyramid(6)
    zs = enumerate_zigzags(t)
    faces = [frozenset(f) for f in t.faces]
    engine_sets = set()
    for z in zs:
        engine_sets.add(frozenset(z.passes))
        engine_sets.add(frozenset(z.reverse().passes))
    oracle_sets = set()
    for orbit in oracle.orbits(faces):
        oracle_sets.add(frozenset(_state_pass(s) for s in orbit))
    assert engine_sets == oracle_sets


def test_no_self_reversed_zigzags():
    for t in (TET, bipyramid(4), bipyramid(9), platonic("icosahedron")):
        for z in enumerate_zigzags(t):
            assert z.passes != z.reverse().passes


def test_is_z_knotted():
    assert is_z_knotted(bipyramid(5))
    assert not is_z_knotted(bipyramid(6))
    assert not is_z_knotted(TET)


def test_enumeration_deterministic():
    a = enumerate_zigzags(bipyramid(8))
    b = enumerate_zigzags(bipyramid(8))
    assert a == b


# ----------------------------------------------------------------------
# z-orientations


def test_zorientation_chosen_and_reversed():
    t = bipyramid(6)
    zs = enumerate_zigzags(t)
    tau = make_z_orientation(t, (0, 1))
    assert tau.chosen[0] == zs[0]
    assert tau.chosen[1] == zs[1].reverse()
    assert tau.reversed().bits == (1, 0)


def test_make_z_orientation_validates():
    t = bipyramid(6)
    with pytest.raises(ValueError):
        make_z_orientation(t, (0,))
    with pytest.raises(ValueError):
        make_z_orientation(t, (0, 2))


def test_all_z_orientations_order():
    t = bipyramid(4)
    taus = list(all_z_orientations(t))
    assert len(taus) == 16
    assert taus[0].bits == (0, 0, 0, 0)
    assert taus[-1].bits == (1, 1, 1, 1)
    assert taus[5].bits == (0, 1, 0, 1)


# ----------------------------------------------------------------------
# classification


def test_classify_bipyramid_counts(bipyramid_corpus):
    for n, (t, tau) in bipyramid_corpus.items():
        cls = classify(t, tau)
        n_i = sum(1 for ty in cls.edge_types.values() if ty == "I")
        n_ii = sum(1 for ty in cls.edge_types.values() if ty == "II")
        assert (n_i, n_ii) == (2 * n, n)
        assert set(cls.type_i_vertices) == {"a", "b"}
        assert all(ty == "I" for ty in cls.face_types.values())
        assert is_homogeneous(t, tau)


def test_classify_base_directed(bipyramid_corpus):
    for n, (t, tau) in bipyramid_corpus.items():
        cls = classify(t, tau)
        for i in range(1, n + 1):
            u, w = str(i), str(i % n + 1)
            assert cls.edge_directions[tuple(sorted((u, w)))] == (u, w)


def test_all_type_ii_orientations():
    # one orientation of BP_4 and BP_6 turns every edge type II
    for n, bits in ((4, (0, 0, 0, 0)), (6, (0, 0))):
        t = bipyramid(n)
        cls = classify(t, make_z_orientation(t, bits))
        assert all(ty == "II" for ty in cls.edge_types.values())
        assert not cls.type_i_vertices
        assert all(ty == "II" for ty in cls.face_types.values())


def test_homogeneous_bits():
    # the homogeneous orientations of BP_4 and BP_6 in canonical bit order
    t4 = bipyramid(4)
    assert is_homogeneous(t4, make_z_orientation(t4, (0, 0, 1, 1)))
    assert not is_homogeneous(t4, make_z_orientation(t4, (0, 0, 0, 0)))
    t6 = bipyramid(6)
    assert is_homogeneous(t6, make_z_orientation(t6, (0, 1)))
    assert not is_homogeneous(t6, make_z_orientation(t6, (0, 0)))


def test_double_cover_under_every_orientation():
    rng = random.Random(7)
    for t in (TET, bipyramid(5), bipyramid(6)):
        for tau in sampled_orientations(t, rng):
            counts: dict = {}
            for z in tau.chosen:
                for e, k in z.edge_counts().items():
                    counts[e] = counts.get(e, 0) + k
            assert counts == {e: 2 for e in t.edges}


def test_face_dichotomy_everywhere():
    # classify() raises if any face fails the two-type dichotomy
    rng = random.Random(11)
    for t in (TET, bipyramid(4), bipyramid(7), platonic("icosahedron")):
        for tau in sampled_orientations(t, rng):
            cls = classify(t, tau)
            assert set(cls.face_types.values()) <= {"I", "II"}


def test_balance_at_every_vertex():
    rng = random.Random(13)
    for t in (bipyramid(5), bipyramid(8), platonic("tetrahedron")):
        for tau in sampled_orientations(t, rng):
            cls = classify(t, tau)
            arcs = list(cls.edge_directions.values())
            for v in t.vertices:
                assert sum(1 for a in arcs if a[0] == v) == sum(
                    1 for a in arcs if a[1] == v
                )


def test_classification_reversal_stable():
    rng = random.Random(17)
    for t in (bipyramid(5), bipyramid(6)):
        for tau in sampled_orientations(t, rng):
            cls = classify(t, tau)
            rev = classify(t, tau.reversed())
            assert cls.edge_types == rev.edge_types
            assert cls.vertex_types == rev.vertex_types
            assert cls.face_types == rev.face_types
            assert {e: (d[1], d[0]) for e, d in cls.edge_directions.items()} == (
                rev.edge_directions
            )


def test_face_shadow_structure():
    t = bipyramid(5)
    z = enumerate_zigzags(t)[0]
    shadow = face_shadow(t, z)
    assert len(shadow) == len(z)
    for i in range(len(z)):
        f = shadow[i]
        assert set(z.passes[i].edge) <= set(f)
        assert set(z.passes[(i + 1) % len(z)].edge) <= set(f)


def test_homogeneity_needs_period_three():
    # in a homogeneous orientation type-II positions sit every third step
    t, tau = bipyramid(7), None
    tau = make_z_orientation(t, (0,))
    if not is_homogeneous(t, tau):
        tau = make_z_orientation(t, (1,))
    assert is_homogeneous(t, tau)
    cls = classify(t, tau)
    z = tau.chosen[0]
    positions = [i for i, p in enumerate(z.passes) if cls.edge_types[p.edge] == "II"]
    assert len(positions) == len(z) // 3
    assert len({i % 3 for i in positions}) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 9), st.data())
def test_random_orientations_classify(n, data):
    t = bipyramid(n)
    k = len(enumerate_zigzags(t))
    bits = tuple(data.draw(st.integers(0, 1)) for _ in range(k))
    cls = classify(t, make_z_orientation(t, bits))
    # every edge typed, type-II edges directed, every face typed
    assert set(cls.edge_types) == set(t.edges)
    assert set(cls.edge_directions) == {
        e for e, ty in cls.edge_types.items() if ty == "II"
    }
    assert set(cls.face_types) == set(t.faces)


# ----------------------------------------------------------------------
# formatting


def test_format_zigzags():
    t = bipyramid(3)
    out = format_zigzags(enumerate_zigzags(t))
    assert out.startswith("z 0 18 ")
    assert out.count("\n") == 1


def test_format_classification():
    t = bipyramid(3)
    tau = make_z_orientation(t, (0,))
    out = format_classification(classify(t, tau))
    assert "E 1 2" in out
    assert "V a I" in out
    assert "F 1 2 a" in out
