import itertools

import networkx as nx
import pytest
from conftest import class_members, connected_class_members, random_edge_graphs
from hypothesis import given

from forestpart.errors import InconsistentRotation, LoopError, MultiEdgeError, NonPlanar, NotConnected
from forestpart.planegraph import (
    build,
    class_membership,
    edge_class_membership,
    embed_planar,
    from_rotation,
    has_cycle_of_length,
)


def cycle(k):
    return build([(i, (i + 1) % k) for i in range(k)])


K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_k4_faces_are_triangles():
    g = build(K4)
    assert len(g.faces) == 4
    assert all(len(f) == 3 for f in g.faces)
    assert g.euler_characteristic() == 2


def test_c6_two_hexagons(c6):
    assert sorted(map(len, c6.faces)) == [6, 6]


def test_k5_nonplanar():
    with pytest.raises(NonPlanar):
        build(list(itertools.combinations(range(5), 2)))


def test_k33_nonplanar():
    with pytest.raises(NonPlanar):
        embed_planar(6, [(a, b) for a in range(3) for b in range(3, 6)])


def test_tree_single_face():
    g = build([(0, 1), (1, 2), (2, 3), (1, 4)])
    assert len(g.faces) == 1 and len(g.faces[0]) == 8


def test_cube_faces():
    q3 = nx.hypercube_graph(3)
    idx = {v: i for i, v in enumerate(sorted(q3))}
    g = build([(idx[a], idx[b]) for a, b in q3.edges])
    assert sorted(map(len, g.faces)) == [4] * 6


def test_single_vertex():
    g = build([], n=1)
    assert g.faces == ((),) and g.euler_characteristic() == 2


def test_rejects_loops_and_multi_edges():
    with pytest.raises(LoopError):
        build([(0, 0)])
    with pytest.raises(MultiEdgeError):
        build([(0, 1), (1, 0)])


def test_inconsistent_rotation():
    with pytest.raises(InconsistentRotation):
        from_rotation([[1], [2], [0]])  # 0->1 without 1->0
    # K4 with one rotation flipped is still consistent but has genus 1 faces
    with pytest.raises(InconsistentRotation):
        from_rotation([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])


def test_short_cycle_examples(c6):
    assert not has_cycle_of_length(c6, 4)
    assert has_cycle_of_length(c6, 6)
    assert has_cycle_of_length(build(K4), 4)
    tail = build([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    assert [k for k in range(3, 7) if has_cycle_of_length(tail, k)] == [3]


def test_class_examples(k3):
    assert class_membership(k3).in_class
    rep = class_membership(build(K4))
    assert rep.has_4_cycle and not rep.in_class
    d = nx.dodecahedral_graph()
    assert edge_class_membership(20, list(d.edges)).has_5_cycle


def test_require_connected():
    g = build([(0, 1), (2, 3)])
    assert not g.is_connected
    assert g.euler_characteristic() == 2 * len(g.components)
    with pytest.raises(NotConnected):
        g.require_connected()


def _brute_cycle_lengths(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return {len(c) for c in nx.simple_cycles(g, length_bound=6)}


@given(random_edge_graphs(n_max=8))
def test_cycle_detection_matches_enumeration(ne):
    n, edges = ne
    lengths = _brute_cycle_lengths(n, edges)
    report = edge_class_membership(n, edges)
    assert report.has_4_cycle == (4 in lengths)
    assert report.has_5_cycle == (5 in lengths)
    if report.is_planar:
        g = build(edges, n=n)
        for k in range(3, 7):
            assert has_cycle_of_length(g, k) == (k in lengths)


@given(random_edge_graphs(n_max=9))
def test_planarity_and_euler(ne):
    n, edges = ne
    planar = nx.check_planarity(nx.Graph(edges))[0] if edges else True
    if not planar:
        with pytest.raises(NonPlanar):
            build(edges, n=n)
        return
    g = build(edges, n=n)
    assert g.n - g.m + len(g.faces) == 2 * len(g.components)
    assert sum(map(len, g.faces)) == 2 * g.m == sum(g.degrees)


@given(connected_class_members())
def test_darts_partitioned_and_faces_match_networkx(g):
    darts = [d for f in g.faces for d in zip(f, f[1:] + f[:1])] if g.m else []
    assert len(darts) == len(set(darts)) == 2 * g.m
    # independent face trace through networkx's embedding structure
    emb = nx.PlanarEmbedding()
    emb.add_nodes_from(range(g.n))
    for v in range(g.n):
        prev = None
        for u in g.rotation[v]:
            emb.add_half_edge(v, u, ccw=prev) if prev is not None else emb.add_half_edge(v, u)
            prev = u
    emb.check_structure()
    seen, sizes = set(), []
    for v, u in emb.edges:
        if (v, u) not in seen:
            sizes.append(len(emb.traverse_face(v, u, mark_half_edges=seen)))
    ours = sorted(len(f) for f in g.faces if f)
    # networkx traverse_face lists vertices, collapsing nothing; same walk lengths
    assert sorted(sizes) == ours


@given(class_members())
def test_embedding_deterministic(g):
    again = build(g.edges, n=g.n)
    assert sorted(map(len, again.faces)) == sorted(map(len, g.faces))
    assert again.rotation == g.rotation


@given(connected_class_members())
def test_delete_and_induce(g):
    for v in range(min(g.n, 3)):
        sub, keep = g.delete_vertex(v)
        assert sub.n == g.n - 1 and v not in keep
        assert sub.m == g.m - g.deg(v)
        assert sub.euler_characteristic() == 2 * len(sub.components) or sub.n == 0
