"""Structural vertex and face classes used by the configurations and rules.

Degree vocabulary: a k-vertex has degree exactly k, a k+-vertex at least
k and a k--vertex at most k; the same for faces with face degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotATriangle
from .planegraph import PlaneGraph


@dataclass(frozen=True, order=True)
class PendentRecord:
    """``owner`` is adjacent to the 3-vertex ``anchor`` of the 3-face ``face``
    and does not lie on ``face``."""

    owner: int
    anchor: int
    face: int


def pendent_neighbor(g: PlaneGraph, u: int, face: int) -> int:
    """The unique neighbour of the 3-vertex ``u`` that is not on ``face``."""
    on_face = set(g.faces[face])
    off = [w for w in g.rotation[u] if w not in on_face]
    if g.deg(u) != 3 or len(g.faces[face]) != 3 or u not in on_face or len(off) != 1:
        raise ValueError(f"vertex {u} is not a 3-vertex on 3-face {face}")
    return off[0]


def is_terrible(g: PlaneGraph, face: int) -> bool:
    walk = g.faces[face]
    if len(walk) != 3:
        raise NotATriangle(f"face {face} has degree {len(walk)}")
    threes = [u for u in walk if g.deg(u) == 3]
    if len(threes) < 2:
        return False
    return any(g.deg(pendent_neighbor(g, u, face)) <= 4 for u in threes)


def _in_f2_f3(g: PlaneGraph, face: int) -> bool:
    return len(g.faces[face]) == 3 and any(g.deg(u) in (2, 3) for u in g.faces[face])


def is_bad(g: PlaneGraph, v: int) -> bool:
    d = g.deg(v)
    if d not in (6, 7, 8):
        return False
    tri = g.vertex_triangles(v)
    terrible = [f for f in tri if is_terrible(g, f)]
    others = [f for f in tri if f not in terrible and _in_f2_f3(g, f)]
    if len(terrible) != d - 5 or len(others) != 1:
        return False
    covered = {u for f in terrible + others for u in g.faces[f]}
    return all(g.deg(u) <= 3 for u in g.rotation[v] if u not in covered)


@dataclass(frozen=True)
class Classification:
    w2: frozenset[int]
    f2: frozenset[int]
    f3: frozenset[int]
    terrible: frozenset[int]
    bad: frozenset[int]
    f2_star: frozenset[int]
    pendent: tuple[PendentRecord, ...]

    @cached_property
    def pendent_by_owner(self) -> dict[int, tuple[PendentRecord, ...]]:
        out: dict[int, list[PendentRecord]] = {}
        for rec in self.pendent:
            out.setdefault(rec.owner, []).append(rec)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def pendent_of(self) -> dict[tuple[int, int], int]:
        """``(anchor, face) -> owner``."""
        return {(r.anchor, r.face): r.owner for r in self.pendent}

    def in_f2_or_f3(self, face: int) -> bool:
        return face in self.f2 or face in self.f3

    def to_dict(self) -> dict:
        return {
            "w2": sorted(self.w2),
            "f2": sorted(self.f2),
            "f3": sorted(self.f3),
            "terrible": sorted(self.terrible),
            "bad": sorted(self.bad),
            "f2_star": sorted(self.f2_star),
            "pendent": [[r.owner, r.anchor, r.face] for r in self.pendent],
        }


def classify(g: PlaneGraph) -> Classification:
    g.require_connected()
    deg = g.degrees
    tri = g.triangles
    w2 = frozenset(v for v in range(g.n) if deg[v] == 2 and not g.vertex_triangles(v))
    f2 = frozenset(f for f in tri if any(deg[u] == 2 for u in g.faces[f]))
    f3 = frozenset(f for f in tri if any(deg[u] == 3 for u in g.faces[f]))
    terrible = frozenset(f for f in f3 if is_terrible(g, f))
    bad = frozenset(v for v in range(g.n) if is_bad(g, v))
    f2_star = frozenset(f for f in f2 if any(deg[u] == 5 or u in bad for u in g.faces[f]))
    pendent = sorted(
        PendentRecord(pendent_neighbor(g, u, f), u, f)
        for f in tri
        for u in g.faces[f]
        if deg[u] == 3
    )
    return Classification(w2, f2, f3, terrible, bad, f2_star, tuple(pendent))
