import pytest
from conftest import connected_class_members, gadget_graphs
from hypothesis import given

from forestpart.classify import classify, is_bad, is_terrible
from forestpart.corpus import TEMPLATES, Assembly, bad_vertex_gadget, terrible_gadget
from forestpart.errors import NotATriangle, NotConnected
from forestpart.planegraph import build
from oracles import classification_oracle as oracle


def check_against_oracle(g):
    cls = classify(g)
    w2, f2, f3, terrible, bad, star, pend = oracle(g)
    assert cls.w2 == w2 and cls.f2 == f2 and cls.f3 == f3
    assert cls.terrible == terrible and cls.bad == bad and cls.f2_star == star
    assert {(r.owner, r.anchor, r.face) for r in cls.pendent} == pend
    assert len(cls.pendent) == len(pend)


def test_c6_all_w2(c6):
    cls = classify(c6)
    assert cls.w2 == set(range(6)) and not cls.f2 and not cls.f3


def test_terrible_face_gadget():
    g = terrible_gadget()
    (f,) = g.triangles
    assert is_terrible(g, f)
    assert classify(g).terrible == {f}


@pytest.mark.parametrize("d", [6, 7, 8])
def test_bad_vertex_gadgets(d):
    g, v, _ = bad_vertex_gadget(d)
    assert g.deg(v) == d and is_bad(g, v)
    cls = classify(g)
    assert v in cls.bad
    assert len([f for f in g.vertex_triangles(v) if f in cls.terrible]) == d - 5


def test_bad_gadget_with_heavy_off_face_neighbour():
    g, v, _ = bad_vertex_gadget(6)
    leaf = next(u for u in g.rotation[v] if g.deg(u) == 1)
    a = Assembly(g)
    for _ in range(3):
        a.glue(TEMPLATES["edge"], leaf)
    h = a.graph
    assert h.deg(leaf) == 4 and not is_bad(h, v)


def test_five_vertex_never_bad():
    g = build([(0, i) for i in range(1, 6)])
    assert not is_bad(g, 0)


def test_336_face_with_heavy_pendents_not_terrible():
    # triangle (0, 1, 2); 0 has degree 6; 1 and 2 hang on 5-vertices
    a = Assembly(TEMPLATES["triangle"])
    for _ in range(4):
        a.glue(TEMPLATES["edge"], 0)
    for x in (1, 2):
        ids = a.glue(TEMPLATES["edge"], x)
        for _ in range(4):
            a.glue(TEMPLATES["edge"], ids[1])
    g = a.graph
    f = next(f for f in g.triangles if 0 in g.faces[f])
    assert sorted(g.deg(u) for u in g.faces[f]) == [3, 3, 6]
    assert not is_terrible(g, f)


def test_266_face_not_terrible():
    a = Assembly(TEMPLATES["triangle"])
    for v in (0, 1):
        for _ in range(4):
            a.glue(TEMPLATES["edge"], v)
    g = a.graph
    (f,) = g.triangles
    assert not is_terrible(g, f)


def test_not_a_triangle(c6):
    with pytest.raises(NotATriangle):
        is_terrible(c6, 0)


def test_disconnected_rejected():
    with pytest.raises(NotConnected):
        classify(build([(0, 1), (2, 3)]))


@given(connected_class_members())
def test_matches_oracle_small(g):
    check_against_oracle(g)


@given(gadget_graphs())
def test_matches_oracle_gadgets(g):
    check_against_oracle(g)


@given(gadget_graphs())
def test_invariants(g):
    cls = classify(g)
    deg = g.degrees
    assert cls.f2_star <= cls.f2 and cls.terrible <= cls.f3
    assert all(deg[v] == 2 for v in cls.w2)
    for f in cls.terrible:
        assert sum(1 for u in g.faces[f] if deg[u] == 3) >= 2
    for v in cls.bad:
        assert deg[v] in (6, 7, 8)
        assert sum(1 for u in g.rotation[v] if deg[u] >= 4) <= 1
    for r in cls.pendent:
        assert g.adjacent(r.owner, r.anchor) and r.owner not in g.faces[r.face] and deg[r.anchor] == 3
    assert classify(g) == cls
