"""Detectors for the thirteen reducible configurations C1..C13.

Each detector returns :class:`ConfigWitness` objects whose ``roles`` name
the vertices the matching extension argument talks about (``v``, ``x``,
``y``, ``x'``, ``y'``, ``x1``, ...).  ``delete_vertex`` is the vertex the
constructive partitioner removes before recursing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .classify import Classification, pendent_neighbor
from .planegraph import PlaneGraph

KINDS = tuple(f"C{i}" for i in range(1, 14))
# cheap detectors first
SEARCH_ORDER = ("C2", "C3", "C1") + tuple(f"C{i}" for i in range(4, 14))
MAX_WITNESSES = 10_000


@dataclass(frozen=True)
class ConfigWitness:
    kind: str
    roles: dict = field(compare=False)
    vertices: tuple[int, ...]
    faces: tuple[int, ...]
    delete_vertex: int | None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "roles": {k: list(v) if isinstance(v, tuple) else v for k, v in self.roles.items()},
            "witness_vertices": list(self.vertices),
            "witness_faces": list(self.faces),
            "delete_vertex": self.delete_vertex,
        }


def _witness(kind: str, roles: dict, faces, delete: int | None) -> ConfigWitness:
    verts: list[int] = []
    for value in roles.values():
        for u in value if isinstance(value, tuple) else (value,):
            if u not in verts:
                verts.append(u)
    return ConfigWitness(kind, roles, tuple(verts), tuple(faces), delete)


def _is_2_on_triangle(g: PlaneGraph, cls: Classification, u: int) -> bool:
    return g.deg(u) == 2 and u not in cls.w2


def terrible_roles(g: PlaneGraph, v: int, face: int) -> dict:
    """Roles ``x, y, x', y'`` of the terrible face ``face`` through ``v``.

    ``x`` is a 3-vertex whose pendent neighbour ``x'`` is a 4--vertex.
    """
    others = sorted(u for u in g.faces[face] if u != v)
    candidates = [u for u in others if g.deg(u) == 3 and g.deg(pendent_neighbor(g, u, face)) <= 4]
    x = candidates[0]
    y = others[1] if others[0] == x else others[0]
    roles = {"v": v, "x": x, "y": y, "x'": pendent_neighbor(g, x, face)}
    if g.deg(y) == 3:
        roles["y'"] = pendent_neighbor(g, y, face)
    return roles


def _c1(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for f, walk in enumerate(g.faces):
        k = len(walk)
        if k < 7:
            continue
        hits = [u for u in walk if _is_2_on_triangle(g, cls, u)]
        if len(hits) >= k - 5:
            yield _witness("C1", {"twos": tuple(sorted(set(hits)))}, [f], None)


def _c2(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        if g.deg(v) <= 1:
            yield _witness("C2", {"v": v}, [], v)


def _c3(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        if g.deg(v) == 2:
            low = sorted(u for u in g.rotation[v] if g.deg(u) <= 4)
            if low:
                yield _witness("C3", {"x": v, "u": low[0]}, [], v)


def _c4(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for f in g.triangles:
        tri = sorted(g.faces[f])
        for x in tri:
            if g.deg(x) != 2:
                continue
            for y in tri:
                if y == x or g.deg(y) != 5:
                    continue
                z = next(u for u in tri if u not in (x, y))
                if g.deg(z) <= 6:
                    yield _witness("C4", {"x": x, "y": y, "z": z}, [f], x)


def _c5(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for f in g.triangles:
        tri = sorted(g.faces[f])
        for x in tri:
            if g.deg(x) != 3:
                continue
            y, z = (u for u in tri if u != x)
            if g.deg(y) <= 5 and g.deg(z) <= 5:
                xp = pendent_neighbor(g, x, f)
                if g.deg(xp) <= 4:
                    yield _witness("C5", {"x": x, "y": y, "z": z, "x'": xp}, [f], x)


def _c6(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        if g.deg(v) != 5 or any(g.deg(u) > 3 for u in g.rotation[v]):
            continue
        for x1 in sorted(u for u in g.rotation[v] if u in cls.w2):
            y1 = next(u for u in g.rotation[x1] if u != v)
            yield _witness("C6", {"v": v, "x1": x1, "y1": y1}, [], x1)


def _small_pendent_face(g: PlaneGraph, f: int) -> bool:
    return max(g.deg(u) for u in g.faces[f]) <= 5


def _c7(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        if g.deg(v) != 5:
            continue
        recs = cls.pendent_by_owner.get(v, ())
        faces = sorted({r.face for r in recs})
        if len(faces) < 5:
            continue
        small = [f for f in faces if _small_pendent_face(g, f)]
        if len(small) < 4:
            continue
        anchors = sorted(recs, key=lambda r: (not _small_pendent_face(g, r.face), r.anchor))
        xs = tuple(r.anchor for r in anchors)
        yield _witness("C7", {"v": v, "xs": xs}, [r.face for r in anchors], v)


def _terrible_at(g: PlaneGraph, cls: Classification, v: int) -> list[int]:
    return [f for f in g.vertex_triangles(v) if f in cls.terrible]


def _terrible_witness(kind: str, g: PlaneGraph, cls: Classification, v: int, extra: dict | None = None):
    for f in _terrible_at(g, cls, v):
        roles = terrible_roles(g, v, f)
        if extra:
            roles.update(extra)
        yield _witness(kind, roles, [f], roles["x"])


def _c8(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in sorted(cls.bad):
        if all(g.deg(u) <= 6 for u in g.rotation[v]):
            yield from _terrible_witness("C8", g, cls, v)


def _c9(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for f in sorted(cls.f2 | cls.f3):
        bads = sorted(u for u in g.faces[f] if u in cls.bad)
        if len(bads) >= 2:
            for v in bads:
                w = next(u for u in bads if u != v)
                for wit in _terrible_witness("C9", g, cls, v, {"w": w}):
                    yield ConfigWitness(wit.kind, wit.roles, wit.vertices, wit.faces + (f,), wit.delete_vertex)


def _c10(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        if g.deg(v) == 6 and len(g.vertex_triangles(v)) >= 3:
            yield from _terrible_witness("C10", g, cls, v)


def _c11(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        d = g.deg(v)
        if 6 <= d <= 10 and len(_terrible_at(g, cls, v)) >= d - 4:
            yield from _terrible_witness("C11", g, cls, v)


def _c12(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        d = g.deg(v)
        if 6 <= d <= 10 and len(_terrible_at(g, cls, v)) >= d - 5 and all(g.deg(u) <= 3 for u in g.rotation[v]):
            yield from _terrible_witness("C12", g, cls, v)


def _f2_star_roles(g: PlaneGraph, v: int, f: int) -> tuple[int, int]:
    """``(x, y)`` on the F2*-face ``f`` through ``v``: ``x`` is its 2-vertex."""
    others = sorted(u for u in g.faces[f] if u != v)
    x = next(u for u in others if g.deg(u) == 2)
    y = others[1] if others[0] == x else others[0]
    return x, y


def _c13(g: PlaneGraph, cls: Classification) -> Iterator[ConfigWitness]:
    for v in range(g.n):
        d = g.deg(v)
        if not 7 <= d <= 10 or v in cls.bad:
            continue
        tri = g.vertex_triangles(v)
        stars = [f for f in tri if f in cls.f2_star]
        for f1 in stars:
            rest = [f for f in tri if f != f1 and (f in cls.terrible or f in cls.f2_star)]
            if len(rest) < d - 6:
                continue
            x1, y1 = _f2_star_roles(g, v, f1)
            xs, ys, xps, yps, kinds = [], [], [], [], []
            for f in rest:
                if f in cls.terrible:
                    r = terrible_roles(g, v, f)
                    xs.append(r["x"])
                    ys.append(r["y"])
                    xps.append(r["x'"])
                    yps.append(r.get("y'", -1))
                    kinds.append("T")
                else:
                    x, y = _f2_star_roles(g, v, f)
                    xs.append(x)
                    ys.append(y)
                    xps.append(-1)
                    yps.append(-1)
                    kinds.append("S")
            roles = {
                "v": v, "x1": x1, "y1": y1,
                "xs": tuple(xs), "ys": tuple(ys),
                "x's": tuple(xps), "y's": tuple(yps),
                "face_kinds": "".join(kinds),
            }
            # face_kinds and the -1 placeholders are not vertices
            wit_roles = {k: val for k, val in roles.items() if k in ("v", "x1", "y1", "xs", "ys")}
            base = _witness("C13", wit_roles, [f1] + rest, x1)
            yield ConfigWitness("C13", roles, base.vertices, base.faces, x1)


DETECTORS: dict[str, Callable[[PlaneGraph, Classification], Iterator[ConfigWitness]]] = {
    "C1": _c1, "C2": _c2, "C3": _c3, "C4": _c4, "C5": _c5, "C6": _c6, "C7": _c7,
    "C8": _c8, "C9": _c9, "C10": _c10, "C11": _c11, "C12": _c12, "C13": _c13,
}


def detect(g: PlaneGraph, cls: Classification, kind: str, limit: int = MAX_WITNESSES) -> list[ConfigWitness]:
    """All witnesses of ``kind``, ordered by witness vertex ids."""
    out: list[ConfigWitness] = []
    for wit in DETECTORS[kind](g, cls):
        out.append(wit)
        if len(out) >= limit:
            break
    out.sort(key=lambda w: (w.vertices, w.faces))
    return out


def find_any(g: PlaneGraph, cls: Classification) -> ConfigWitness | None:
    for kind in SEARCH_ORDER:
        found = detect(g, cls, kind)
        if found:
            return found[0]
    return None
