import pytest
from conftest import connected_class_members, gadget_graphs
from hypothesis import given
from oracles import config_oracle

from forestpart.classify import classify
from forestpart.configs import KINDS, SEARCH_ORDER, detect, find_any
from forestpart.corpus import config_examples, enumerate_exhaustive, terrible_gadget
from forestpart.planegraph import build

EXAMPLES = config_examples()


def agree(g):
    cls = classify(g)
    want = config_oracle(g)
    for kind in KINDS:
        got = detect(g, cls, kind)
        assert bool(got) == bool(want[kind]), kind
        if kind == "C1":
            assert {w.faces[0] for w in got} == want[kind]
        else:
            assert {w.delete_vertex for w in got} <= want[kind], kind
    return cls


def test_edge_has_two_c2():
    g = build([(0, 1)])
    ws = detect(g, classify(g), "C2")
    assert [w.delete_vertex for w in ws] == [0, 1]


def test_path_c3_at_middle():
    g = build([(0, 1), (1, 2)])
    (w,) = detect(g, classify(g), "C3")
    assert w.delete_vertex == 1


def test_terrible_gadget_c5():
    g = terrible_gadget()
    assert detect(g, classify(g), "C5")


def test_tree_and_cycle_find_any(c6):
    tree = build([(0, 1), (1, 2), (1, 3), (3, 4)])
    assert find_any(tree, classify(tree)).kind == "C2"
    assert find_any(c6, classify(c6)).kind == "C3"


def test_search_order():
    assert SEARCH_ORDER[:3] == ("C2", "C3", "C1")
    assert sorted(SEARCH_ORDER, key=lambda k: int(k[1:])) == list(KINDS)


@pytest.mark.parametrize("kind", sorted(EXAMPLES, key=lambda k: int(k[1:])))
def test_constructed_instance_fires(kind):
    g = EXAMPLES[kind]
    cls = agree(g)
    ws = detect(g, cls, kind)
    assert ws and all(w.kind == kind and w.delete_vertex is not None for w in ws)


def test_witness_order_and_cap():
    g = EXAMPLES["C9"]
    cls = classify(g)
    ws = detect(g, cls, "C2")
    assert len(ws) > 3
    assert ws == sorted(ws, key=lambda w: (w.vertices, w.faces))
    assert len(detect(g, cls, "C2", limit=3)) == 3


def test_c13_roles():
    g = EXAMPLES["C13"]
    (w,) = detect(g, classify(g), "C13")
    r = w.roles
    assert g.deg(r["v"]) == 7 and g.deg(r["x1"]) == 2 and g.deg(r["y1"]) == 5
    assert r["face_kinds"] == "T" and w.delete_vertex == r["x1"]


def test_exhaustive_corpus_agrees():
    for g in enumerate_exhaustive(7):
        agree(g)
        assert find_any(g, classify(g)) is not None


@given(connected_class_members(n_max=10))
def test_random_members_agree(g):
    agree(g)
    assert find_any(g, classify(g)) is not None


@given(gadget_graphs())
def test_gadgets_agree(g):
    agree(g)


@given(gadget_graphs())
def test_witness_roles_are_on_the_graph(g):
    cls = classify(g)
    for kind in KINDS:
        for w in detect(g, cls, kind):
            assert all(0 <= v < g.n for v in w.vertices)
            assert all(0 <= f < len(g.faces) for f in w.faces)
            assert (w.delete_vertex is None) == (kind == "C1")
