"""Plane graphs stored as rotation systems.

A :class:`PlaneGraph` is a simple graph on vertices ``0..n-1`` together
with a counterclockwise cyclic order of neighbours at every vertex.  Faces
are the orbits of the dart permutation ``(u, v) -> (v, w)`` where ``w`` is
the neighbour just before ``u`` in the rotation at ``v``.  A face is stored
as the tuple of dart tails along its boundary walk, so a cut vertex may
occur several times on one face and a bridge contributes 2 to the degree
of the face containing it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .errors import InconsistentRotation, LoopError, MultiEdgeError, NonPlanar, NotConnected

Edge = tuple[int, int]


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> list[Edge]:
    seen: set[Edge] = set()
    out: list[Edge] = []
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InconsistentRotation(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise MultiEdgeError(f"parallel edge {key}")
        seen.add(key)
        out.append(key)
    return sorted(out)


def _trace_faces(rotation: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(rotation)
    position = [{u: i for i, u in enumerate(rot)} for rot in rotation]
    visited: set[Edge] = set()
    faces: list[tuple[int, ...]] = []
    for u in range(n):
        if not rotation[u]:
            # an isolated vertex bounds one degree-0 face of its own
            faces.append(())
            continue
        for v in rotation[u]:
            if (u, v) in visited:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in visited:
                visited.add((a, b))
                walk.append(a)
                rot_b = rotation[b]
                w = rot_b[(position[b][a] - 1) % len(rot_b)]
                a, b = b, w
            faces.append(tuple(walk))
    return tuple(faces)


def _components(n: int, adj: Sequence[Sequence[int]]) -> list[list[int]]:
    comp = [-1] * n
    out: list[list[int]] = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        out.append(sorted(members))
    return out


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    """Immutable simple plane graph.  Build it with :func:`build`."""

    n: int
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...] = field(repr=False)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted((u, v) for u in range(self.n) for v in self.rotation[u] if u < v))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rotation)

    def deg(self, v: int) -> int:
        return len(self.rotation[v])

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rotation)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def face_deg(self, f: int) -> int:
        return len(self.faces[f])

    @cached_property
    def dart_face(self) -> dict[Edge, int]:
        """Map dart ``(u, v)`` to the face it bounds."""
        out: dict[Edge, int] = {}
        for i, walk in enumerate(self.faces):
            k = len(walk)
            for j in range(k):
                out[(walk[j], walk[(j + 1) % k])] = i
        return out

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        """Distinct faces incident with each vertex, sorted by face id."""
        inc: list[set[int]] = [set() for _ in range(self.n)]
        isolated = iter(v for v in range(self.n) if not self.rotation[v])
        for i, walk in enumerate(self.faces):
            if not walk:
                # degree-0 faces are emitted in vertex order
                inc[next(isolated)].add(i)
            for v in walk:
                inc[v].add(i)
        return tuple(tuple(sorted(s)) for s in inc)

    @cached_property
    def triangles(self) -> tuple[int, ...]:
        """Ids of the 3-faces."""
        return tuple(i for i, w in enumerate(self.faces) if len(w) == 3)

    def vertex_triangles(self, v: int) -> tuple[int, ...]:
        return tuple(f for f in self.vertex_faces[v] if len(self.faces[f]) == 3)

    @cached_property
    def components(self) -> list[list[int]]:
        return _components(self.n, self.rotation)

    @property
    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components) == 1

    def require_connected(self) -> None:
        if not self.is_connected:
            raise NotConnected(f"graph has {len(self.components)} components")

    def euler_characteristic(self) -> int:
        return self.n - self.m + len(self.faces)

    def induced(self, vertices: Iterable[int]) -> tuple["PlaneGraph", list[int]]:
        """Sub-plane-graph induced by ``vertices`` and the new-to-old id map.

        The rotation at each kept vertex is the old rotation with removed
        neighbours dropped, which is again a genus-0 rotation system.
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rotation = [tuple(index[u] for u in self.rotation[v] if u in index) for v in keep]
        return _from_rotation(rotation), keep

    def delete_vertex(self, v: int) -> tuple["PlaneGraph", list[int]]:
        return self.induced(u for u in range(self.n) if u != v)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def _from_rotation(rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    rot = tuple(tuple(r) for r in rotation)
    return PlaneGraph(n=len(rot), rotation=rot, faces=_trace_faces(rot))


def embed_planar(n: int, edges: Iterable[Sequence[int]]) -> list[list[int]]:
    """Return a counterclockwise rotation system for a planar graph.

    Raises :class:`NonPlanar` when no plane embedding exists.  The result
    is deterministic for a fixed edge list.
    """
    edge_list = _normalize_edges(n, edges)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edge_list)
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise NonPlanar(f"graph with n={n}, m={len(edge_list)} is not planar")
    return [list(reversed(list(emb.neighbors_cw_order(v)))) if g.degree(v) else [] for v in range(n)]


def build(
    edges: Iterable[Sequence[int]],
    rotation: Sequence[Sequence[int]] | None = None,
    n: int | None = None,
) -> PlaneGraph:
    """Build a :class:`PlaneGraph` from an edge list and optional rotation.

    ``n`` defaults to one more than the largest endpoint (or to
    ``len(rotation)``).  Without a rotation the graph is embedded with
    :func:`embed_planar`.
    """
    edges = list(edges)
    if n is None:
        if rotation is not None:
            n = len(rotation)
        else:
            n = 1 + max((max(int(e[0]), int(e[1])) for e in edges), default=-1)
    edge_list = _normalize_edges(n, edges)
    if rotation is None:
        rotation = embed_planar(n, edge_list)
    if len(rotation) != n:
        raise InconsistentRotation(f"rotation lists {len(rotation)} vertices, expected {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_list:
        adj[u].add(v)
        adj[v].add(u)
    for v in range(n):
        r = [int(u) for u in rotation[v]]
        if len(r) != len(set(r)) or set(r) != adj[v]:
            raise InconsistentRotation(f"rotation at vertex {v} does not list each incident edge once")
    g = _from_rotation(rotation)
    if g.euler_characteristic() != 2 * len(g.components):
        raise InconsistentRotation("rotation system does not describe a plane embedding")
    return g


def from_rotation(rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    """Build from a rotation system alone (edges read off the rotation)."""
    n = len(rotation)
    edges = {(min(u, int(v)), max(u, int(v))) for u in range(n) for v in rotation[u]}
    for u in range(n):
        if u in rotation[u]:
            raise LoopError(f"loop at vertex {u}")
        if len(set(rotation[u])) != len(rotation[u]):
            raise MultiEdgeError(f"repeated neighbour in rotation at {u}")
    return build(sorted(edges), rotation, n=n)


def _adjacency(n: int, edges: Iterable[Sequence[int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def adjacency_has_cycle(adj: Sequence[Sequence[int]], k: int) -> bool:
    """True iff the graph given by adjacency lists has a cycle of length k.

    Bounded DFS from every start vertex ``s`` through vertices larger
    than ``s``; a path of ``k`` vertices closing back at ``s`` is a cycle.
    """
    if k < 3:
        return False
    n = len(adj)
    nbrs = [frozenset(a) for a in adj]
    for s in range(n):
        stack = [(s, 1, 1 << s)]
        while stack:
            u, length, used = stack.pop()
            if length == k:
                if s in nbrs[u]:
                    return True
                continue
            for w in adj[u]:
                if w > s and not (used >> w) & 1:
                    stack.append((w, length + 1, used | (1 << w)))
    return False


def has_cycle_of_length(g: PlaneGraph, k: int) -> bool:
    if not 3 <= k <= 6:
        raise ValueError("only cycle lengths 3..6 are supported")
    return adjacency_has_cycle(g.rotation, k)


@dataclass(frozen=True)
class ClassReport:
    is_planar: bool
    has_4_cycle: bool
    has_5_cycle: bool
    is_connected: bool

    @property
    def in_class(self) -> bool:
        return self.is_planar and not self.has_4_cycle and not self.has_5_cycle

    def to_dict(self) -> dict:
        return {
            "is_planar": self.is_planar,
            "has_4_cycle": self.has_4_cycle,
            "has_5_cycle": self.has_5_cycle,
            "is_connected": self.is_connected,
            "in_class": self.in_class,
        }


def class_membership(g: PlaneGraph) -> ClassReport:
    return ClassReport(
        is_planar=True,
        has_4_cycle=has_cycle_of_length(g, 4),
        has_5_cycle=has_cycle_of_length(g, 5),
        is_connected=g.is_connected,
    )


def edge_class_membership(n: int, edges: Iterable[Sequence[int]]) -> ClassReport:
    """Class report for an abstract graph, testing planarity as well."""
    edge_list = _normalize_edges(n, edges)
    adj = _adjacency(n, edge_list)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edge_list)
    return ClassReport(
        is_planar=nx.check_planarity(g)[0],
        has_4_cycle=adjacency_has_cycle(adj, 4),
        has_5_cycle=adjacency_has_cycle(adj, 5),
        is_connected=n > 0 and len(_components(n, adj)) == 1,
    )
