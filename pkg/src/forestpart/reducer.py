"""Constructive (F3, F4)-partitioner.

Part 0 plays the role of A3 (forest, max degree 3) and part 1 of A4
(forest, max degree 4).  A connected instance above the base-case size
has a reducible configuration; its deletion vertex is removed, each
component of the rest is partitioned recursively, and the deleted vertex
is put back by trying, in order, direct placement, the generic
one-neighbour and neighbour-of-neighbour recolourings, and the scripted
recolourings bound to the configuration's roles.  Every candidate is
checked with :func:`verify`; if none is valid the instance is re-solved
exactly (whole instance or a frozen-boundary neighbourhood).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .classify import classify, pendent_neighbor
from .configs import ConfigWitness, find_any
from .errors import InternalInconsistency, NoTemplateApplied, NotInClass, RoleBindingFailure, TooLarge
from .partition import DEFAULT_CAP, F3F4, Partition, solve, verify
from .planegraph import PlaneGraph, class_membership

log = logging.getLogger(__name__)

A3, A4 = 0, 1
UNASSIGNED = -1
FALLBACK_MODES = ("full", "local", "abort")


@dataclass(frozen=True)
class MoveTemplate:
    name: str
    to_a3: tuple[int, ...] = ()
    to_a4: tuple[int, ...] = ()

    def apply(self, assignment: Sequence[int]) -> list[int]:
        out = list(assignment)
        for v in self.to_a3:
            out[v] = A3
        for v in self.to_a4:
            out[v] = A4
        return out


@dataclass
class TraceStep:
    kind: str | None
    roles: dict | None
    deleted: int | None  # original vertex id
    template: str | None
    fallback: bool = False
    fallback_mode: str | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "deleted": self.deleted,
            "template": self.template,
            "fallback": self.fallback,
            "fallback_mode": self.fallback_mode,
        }


@dataclass
class ReduceTrace:
    base_case_size: int
    steps: list[TraceStep] = field(default_factory=list)
    base_cases: int = 0

    @property
    def fallbacks(self) -> int:
        return sum(1 for s in self.steps if s.fallback)

    @property
    def fallback_rate(self) -> float:
        return self.fallbacks / len(self.steps) if self.steps else 0.0

    def summary(self) -> dict:
        kinds: dict[str, int] = {}
        for s in self.steps:
            kinds[s.kind or "?"] = kinds.get(s.kind or "?", 0) + 1
        return {
            "steps": len(self.steps),
            "base_cases": self.base_cases,
            "fallbacks": self.fallbacks,
            "kinds": dict(sorted(kinds.items())),
        }

    def to_dict(self) -> dict:
        return {
            "base_case_size": self.base_case_size,
            "steps": [s.to_dict() for s in self.steps],
            **self.summary(),
        }


# -- helpers over a partial assignment -------------------------------------


def _in_part(g: PlaneGraph, assignment: Sequence[int], v: int, part: int) -> list[int]:
    return [u for u in g.rotation[v] if assignment[u] == part]


def _saturated(g: PlaneGraph, assignment: Sequence[int], v: int) -> bool:
    p = assignment[v]
    return p != UNASSIGNED and len(_in_part(g, assignment, v, p)) >= (3 if p == A3 else 4)


def _other(p: int) -> int:
    return A4 if p == A3 else A3


def generic_templates(g: PlaneGraph, assignment: Sequence[int], v: int) -> Iterator[MoveTemplate]:
    """Single-neighbour and neighbour-of-neighbour recolourings around v.

    For a neighbour u in part i, v joins part i while u leaves it; for a
    neighbour w of u sitting in the other part, w additionally moves into
    part i.
    """
    for u in g.rotation[v]:
        i = assignment[u]
        j = _other(i)
        base = MoveTemplate(f"flip-{u}", *((( v,), (u,)) if i == A3 else ((u,), (v,))))
        yield base
        for w in g.rotation[u]:
            if w == v or assignment[w] != j:
                continue
            if i == A3:
                yield MoveTemplate(f"flip-{u}-pull-{w}", (v, w), (u,))
            else:
                yield MoveTemplate(f"flip-{u}-pull-{w}", (u,), (v, w))


def _role(roles: dict, key: str) -> int:
    try:
        return roles[key]
    except KeyError:
        raise RoleBindingFailure(f"witness lacks role {key!r}") from None


def _terrible_neighbourhood(g: PlaneGraph, a: Sequence[int], v: int, x: int):
    """Sets X and Z around the d-vertex v (x is the deleted 3-vertex)."""
    cls = classify(g)
    X, Z = [], []
    for f in g.vertex_triangles(v):
        for u in g.faces[f]:
            if u in (v, x) or g.deg(u) != 3:
                continue
            pend = pendent_neighbor(g, u, f)
            if a[u] == A4 and a[pend] == A4:
                X.append(u)
            if a[u] == A3 and a[pend] == A3 and f in cls.terrible:
                Z.append(u)
    return X, Z, cls


def scripted_templates(
    g: PlaneGraph, assignment: Sequence[int], witness: ConfigWitness
) -> Iterator[MoveTemplate]:
    """Recolourings from the reducibility arguments, bound to the witness."""
    a = assignment
    kind, roles = witness.kind, witness.roles
    if kind == "C4":
        x, y, z = _role(roles, "x"), _role(roles, "y"), _role(roles, "z")
        for p, q in ((y, z), (z, y)):
            # (A3 + x q - p, A4 + p - q)
            yield MoveTemplate("swap-xz-y", (x, q), (p,))
    elif kind == "C7":
        v = _role(roles, "v")
        for xi in _role(roles, "xs"):
            face = next((f for f in g.vertex_triangles(xi) if v not in g.faces[f]), None)
            if face is None:
                raise RoleBindingFailure(f"no pendent face at {xi}")
            y1, z1 = (u for u in g.faces[face] if u != xi)
            if a[xi] == A3:
                yield MoveTemplate("c7-a3-swap", (v,), (xi,))
            else:
                yield MoveTemplate("c7-a4-swap", (xi,), (v,))
                for z in (y1, z1):
                    if a[z] == A3:
                        yield MoveTemplate("c7-a4-double-swap", (xi,), (v, z))
    elif kind in ("C8", "C9", "C10", "C11", "C12"):
        yield from _terrible_templates(g, a, roles)
    elif kind == "C13":
        yield from _c13_templates(g, a, roles)


def _terrible_templates(g: PlaneGraph, a: Sequence[int], roles: dict) -> Iterator[MoveTemplate]:
    v, x = _role(roles, "v"), _role(roles, "x")
    X, Z, cls = _terrible_neighbourhood(g, a, v, x)
    # (A3 + v - Z, A4 + Z + x - v)
    if Z:
        yield MoveTemplate("z-swap", (v,), tuple(Z) + (x,))
    # d = 10 corner case: every A3-neighbour on a terrible face leaves
    ys = [u for f in g.vertex_triangles(v) if f in cls.terrible for u in g.faces[f] if u not in (v, x) and a[u] == A3]
    if ys:
        yield MoveTemplate("terrible-y-swap", (v,), tuple(ys) + (x,))
    # (A3 + x + X - v, A4 + v - X)
    yield MoveTemplate("x-swap", (x,) + tuple(X), (v,))
    # (A3 + x w + X - v, A4 + v - X - w) with w on another triangle at v
    for f in g.vertex_triangles(v):
        for w in g.faces[f]:
            if w not in (v, x) and a[w] == A4 and w not in X:
                yield MoveTemplate("x-swap-pull", (x, w) + tuple(X), (v,))
    # x_i recolourings on the other terrible faces
    for f in g.vertex_triangles(v):
        if f not in cls.terrible:
            continue
        for xi in g.faces[f]:
            if xi in (v, x) or a[xi] != A4 or g.deg(xi) != 3:
                continue
            yield MoveTemplate("xi-swap", (xi,), (x,))
            xp = pendent_neighbor(g, xi, f)
            if a[xp] == A3:
                yield MoveTemplate("xi-pendent-swap", (xi,), (x, xp))
    # (A3 + x1 + X + Z - v - U, A4 + v + U - X - Z)
    Zc, U = [], []
    for f in g.vertex_triangles(v):
        if f not in cls.terrible:
            continue
        for xj in g.faces[f]:
            if xj in (v, x) or g.deg(xj) != 3 or a[xj] != A4:
                continue
            yj = next(u for u in g.faces[f] if u not in (v, xj))
            xjp = pendent_neighbor(g, xj, f)
            if a[yj] == A4 and a[xjp] == A3:
                Zc.append(xj)
                if _saturated(g, a, xjp):
                    U.append(xjp)
    if Zc:
        yield MoveTemplate("xz-u-swap", (x,) + tuple(X) + tuple(Zc), (v,) + tuple(U))


def _c13_templates(g: PlaneGraph, a: Sequence[int], roles: dict) -> Iterator[MoveTemplate]:
    v, x1, y1 = _role(roles, "v"), _role(roles, "x1"), _role(roles, "y1")
    xs, ys = _role(roles, "xs"), _role(roles, "ys")
    xps, kinds = _role(roles, "x's"), _role(roles, "face_kinds")
    T = [xj for xj, k in zip(xs, kinds) if k == "T"]
    U = [xj for xj, k in zip(xs, kinds) if k == "S" and a[xj] == A3]
    W = [yj for yj, k in zip(ys, kinds) if k == "S" and a[yj] == A3]
    cls = classify(g)
    X = []
    for yj in W:
        if yj not in cls.bad:
            continue
        for f in g.vertex_triangles(yj):
            if f not in cls.terrible:
                continue
            for u in g.faces[f]:
                if u != yj and a[u] == A4 and g.deg(u) == 3 and a[pendent_neighbor(g, u, f)] == A4:
                    X.append(u)
    # (A3 + x1 v + X - y1 - T - U - W, A4 + y1 + T + U + W - v - X)
    yield MoveTemplate("grand-swap", (x1, v) + tuple(X), (y1,) + tuple(T) + tuple(U) + tuple(W))
    for xj, yj, xpj, k in zip(xs, ys, xps, kinds):
        if a[xj] == A4:
            yield MoveTemplate("c13-xj-swap", (xj,), (x1,))
            if k == "T" and a[xpj] == A3:
                yield MoveTemplate("c13-xj-pendent-swap", (xj,), (x1, xpj))
        if a[yj] == A4:
            yield MoveTemplate("c13-yj-swap", (yj,), (x1,))


def improve_for_C13(g: PlaneGraph, assignment: Sequence[int], witness: ConfigWitness) -> list[int]:
    """Swap terrible-face pairs (A3 - y_j + x_j, A4 + y_j - x_j) while that
    stays a valid partition of g - x1 and puts more x_j into A3."""
    roles = witness.roles
    x1 = _role(roles, "x1")
    xs, ys = _role(roles, "xs"), _role(roles, "ys")
    sub, keep = g.delete_vertex(x1)
    a = list(assignment)
    improved = True
    while improved:
        improved = False
        for xj, yj in zip(xs, ys):
            if a[xj] == A4 and a[yj] == A3:
                b = list(a)
                b[xj], b[yj] = A3, A4
                if verify(sub, [b[old] for old in keep]) is None:
                    a = b
                    improved = True
                    break
    return a


def extend(
    g: PlaneGraph,
    deleted: int,
    sub_assignment: Sequence[int],
    witness: ConfigWitness | None,
) -> tuple[list[int], str]:
    """Complete a valid partition of ``g - deleted`` (given on g's vertex
    ids, ``deleted`` unassigned) to one of g.  Returns the assignment and
    the name of the template that produced it."""
    base = list(sub_assignment)
    base[deleted] = UNASSIGNED
    for p in (A3, A4):
        cand = list(base)
        cand[deleted] = p
        if verify(g, cand) is None:
            return cand, f"place-v-{'A3' if p == A3 else 'A4'}"
    for t in generic_templates(g, base, deleted):
        cand = t.apply(base)
        if verify(g, cand) is None:
            return cand, t.name
    if witness is not None:
        starts = [base]
        if witness.kind == "C13":
            improved = improve_for_C13(g, base, witness)
            if improved != base:
                starts.append(improved)
        for start in starts:
            for t in scripted_templates(g, start, witness):
                cand = t.apply(start)
                if UNASSIGNED not in cand and verify(g, cand) is None:
                    return cand, t.name
    raise NoTemplateApplied(f"no recolouring places vertex {deleted}")


def _ball(g: PlaneGraph, v: int, radius: int) -> set[int]:
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in g.rotation[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return set(dist)


def _fallback(g: PlaneGraph, deleted: int, base: Sequence[int], mode: str, cap: int) -> tuple[list[int], str]:
    def full():
        if g.n > cap:
            return None
        part = solve(g, F3F4, cap=cap)
        return list(part.assignment) if part else None

    def local():
        free = _ball(g, deleted, 3)
        fixed = {u: base[u] for u in range(g.n) if u not in free}
        if len(free) > cap:
            return None
        part = solve(g, F3F4, cap=cap, fixed=fixed)
        return list(part.assignment) if part else None

    if mode == "abort":
        raise NoTemplateApplied(f"no recolouring places vertex {deleted}")
    order = (full, local) if mode == "full" else (local, full)
    for attempt in order:
        try:
            result = attempt()
        except TooLarge:
            result = None
        if result is not None:
            return result, attempt.__name__
    raise NoTemplateApplied(f"fallback failed to place vertex {deleted}")


class _Reducer:
    def __init__(self, base_case: int, fallback: str, cap: int):
        if fallback not in FALLBACK_MODES:
            raise ValueError(f"fallback must be one of {FALLBACK_MODES}")
        self.base_case = base_case
        self.fallback = fallback
        self.cap = cap
        self.trace = ReduceTrace(base_case)

    def run(self, g: PlaneGraph, labels: Sequence[int]) -> list[int]:
        """Partition a connected plane graph; ``labels`` maps to original ids."""
        if g.n <= self.base_case:
            part = solve(g, F3F4, cap=max(self.cap, g.n))
            if part is None:
                raise InternalInconsistency(f"no (F3,F4)-partition of a {g.n}-vertex class member")
            self.trace.base_cases += 1
            return list(part.assignment)
        cls = classify(g)
        witness = find_any(g, cls)
        if witness is None:
            raise InternalInconsistency("class member without any reducible configuration")
        if witness.kind == "C1" or witness.delete_vertex is None:
            raise InternalInconsistency("C1 found in a class member")
        x = witness.delete_vertex
        sub, keep = g.delete_vertex(x)
        sub_assign = [UNASSIGNED] * sub.n
        for comp in sub.components:
            comp_graph, comp_keep = sub.induced(comp)
            comp_assign = self.run(comp_graph, [labels[keep[u]] for u in comp_keep])
            for i, u in enumerate(comp_keep):
                sub_assign[u] = comp_assign[i]
        base = [UNASSIGNED] * g.n
        for i, old in enumerate(keep):
            base[old] = sub_assign[i]
        step = TraceStep(witness.kind, witness.to_dict()["roles"], labels[x], None)
        try:
            result, name = extend(g, x, base, witness)
            step.template = name
        except (NoTemplateApplied, RoleBindingFailure) as exc:
            log.info("fallback at %s (%s): %s", labels[x], witness.kind, exc)
            result, mode = _fallback(g, x, base, self.fallback, self.cap)
            step.fallback = True
            step.fallback_mode = mode
        self.trace.steps.append(step)
        return result


def partition_constructively(
    g: PlaneGraph,
    base_case: int = 8,
    fallback: str = "full",
    cap: int = DEFAULT_CAP,
) -> tuple[Partition, ReduceTrace]:
    """(F3, F4)-partition of a class member, built by reduction."""
    if not class_membership(g).in_class:
        raise NotInClass("input has a 4- or 5-cycle")
    import sys

    if sys.getrecursionlimit() < 4 * g.n + 200:
        sys.setrecursionlimit(4 * g.n + 200)
    reducer = _Reducer(base_case, fallback, cap)
    assignment = [UNASSIGNED] * g.n
    for comp in g.components:
        comp_graph, comp_keep = g.induced(comp)
        comp_assign = reducer.run(comp_graph, comp_keep)
        for i, u in enumerate(comp_keep):
            assignment[u] = comp_assign[i]
    partition = Partition(tuple(assignment), F3F4)
    bad = verify(g, partition)
    if bad is not None:
        raise InternalInconsistency(f"constructed partition fails verification: {bad}")
    return partition, reducer.trace
