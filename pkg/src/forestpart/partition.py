"""Two-part vertex partitions with forest / bounded-degree constraints.

A part spec ``F_d`` asks the induced subgraph to be a forest of maximum
degree at most ``d``; ``D_d`` only bounds the maximum degree.  ``d`` may
be ``math.inf``.
"""

from __future__ import annotations

import itertools
import math
import re
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import PartialAssignment, TooLarge
from .planegraph import PlaneGraph

DEFAULT_CAP = 26
ENUMERATE_CAP = 20


class UnionFind:
    """Union by size with path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


class RollbackUnionFind:
    """Union by size without path compression, so unions can be undone."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self._history: list[int] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self._history.append(-1)
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self._history.append(rb)

    def rollback(self) -> None:
        rb = self._history.pop()
        if rb >= 0:
            ra = self.parent[rb]
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]


class PartKind(str, Enum):
    FOREST = "F"
    BOUNDED_DEGREE = "D"


@dataclass(frozen=True)
class PartSpec:
    kind: PartKind
    d: float  # int or math.inf

    @classmethod
    def parse(cls, text: str) -> "PartSpec":
        m = re.fullmatch(r"\s*([FD])\s*(\d+|inf)\s*", text, re.IGNORECASE)
        if not m:
            raise ValueError(f"bad part spec {text!r}; expected e.g. F3, D4, Finf")
        d = math.inf if m.group(2).lower() == "inf" else int(m.group(2))
        return cls(PartKind(m.group(1).upper()), d)

    @property
    def forest(self) -> bool:
        # with d <= 1 a bounded-degree graph is automatically a forest
        return self.kind is PartKind.FOREST and self.d > 1

    def __str__(self) -> str:
        return f"{self.kind.value}{'inf' if self.d == math.inf else int(self.d)}"


def parse_specs(text: str) -> tuple[PartSpec, PartSpec]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated part specs, got {text!r}")
    return PartSpec.parse(parts[0]), PartSpec.parse(parts[1])


F3F4 = (PartSpec(PartKind.FOREST, 3), PartSpec(PartKind.FOREST, 4))


@dataclass(frozen=True)
class Partition:
    assignment: tuple[int, ...]
    specs: tuple[PartSpec, PartSpec] = F3F4

    def part(self, i: int) -> list[int]:
        return [v for v, p in enumerate(self.assignment) if p == i]

    def to_dict(self) -> dict:
        return {"part0": self.part(0), "part1": self.part(1), "specs": [str(s) for s in self.specs]}

    def to_line(self) -> str:
        return "".join(str(p) for p in self.assignment)


@dataclass(frozen=True)
class Violation:
    reason: str  # "degree" or "cycle"
    part: int
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.reason} violation in part {self.part} at {list(self.vertices)}"


def _find_cycle(g: PlaneGraph, assignment: Sequence[int], part: int, u: int, v: int) -> tuple[int, ...]:
    # path from v to u inside the part, which closes a cycle with edge uv
    prev = {v: v}
    stack = [v]
    while stack:
        a = stack.pop()
        if a == u:
            break
        for b in g.rotation[a]:
            if b not in prev and assignment[b] == part and not (a == v and b == u):
                prev[b] = a
                stack.append(b)
    path = [u]
    while path[-1] != v:
        path.append(prev[path[-1]])
    return tuple(path)


def verify(g: PlaneGraph, partition: Partition | Sequence[int], specs=None) -> Violation | None:
    """None when every part induces a graph of its class, else the first
    failing vertex (degree) or a cycle (forest)."""
    if isinstance(partition, Partition):
        assignment, specs = partition.assignment, specs or partition.specs
    else:
        assignment, specs = tuple(partition), specs or F3F4
    if len(assignment) != g.n or any(p not in (0, 1) for p in assignment):
        raise PartialAssignment("assignment must give part 0 or 1 to every vertex")
    for v in range(g.n):
        p = assignment[v]
        if sum(1 for u in g.rotation[v] if assignment[u] == p) > specs[p].d:
            return Violation("degree", p, (v,))
    uf = UnionFind(g.n)
    for u, v in g.edges:
        p = assignment[u]
        if p == assignment[v] and specs[p].forest and not uf.union(u, v):
            return Violation("cycle", p, _find_cycle(g, assignment, p, u, v))
    return None


def degeneracy_order(g: PlaneGraph) -> list[int]:
    """Vertices in reverse smallest-last order (ties by id), so each vertex
    tends to have few earlier neighbours."""
    deg = list(g.degrees)
    removed = [False] * g.n
    order: list[int] = []
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        removed[v] = True
        order.append(v)
        for w in g.rotation[v]:
            if not removed[w]:
                deg[w] -= 1
    order.reverse()
    return order


class _Search:
    def __init__(self, g: PlaneGraph, specs, fixed: dict[int, int] | None):
        self.g = g
        self.specs = specs
        self.assign = [-1] * g.n
        self.part_deg = [0] * g.n
        self.ufs = (RollbackUnionFind(g.n), RollbackUnionFind(g.n))
        order = degeneracy_order(g)
        fixed = fixed or {}
        # fixed vertices go first so the free ones see their final state
        self.order = [v for v in order if v in fixed] + [v for v in order if v not in fixed]
        self.fixed = fixed
        self.symmetric = specs[0] == specs[1] and not fixed

    def _can_place(self, v: int, p: int) -> list[int] | None:
        spec = self.specs[p]
        same = [u for u in self.g.rotation[v] if self.assign[u] == p]
        if len(same) > spec.d or any(self.part_deg[u] + 1 > spec.d for u in same):
            return None
        if spec.forest:
            roots = {self.ufs[p].find(u) for u in same}
            if len(roots) < len(same):
                return None
        return same

    def _place(self, v: int, p: int, same: list[int]) -> None:
        self.assign[v] = p
        self.part_deg[v] = len(same)
        for u in same:
            self.part_deg[u] += 1
            self.ufs[p].union(u, v)

    def _unplace(self, v: int, p: int, same: list[int]) -> None:
        for u in reversed(same):
            self.ufs[p].rollback()
            self.part_deg[u] -= 1
        self.part_deg[v] = 0
        self.assign[v] = -1

    def run(self) -> Iterator[tuple[int, ...]]:
        yield from self._rec(0)

    def _rec(self, i: int) -> Iterator[tuple[int, ...]]:
        if i == len(self.order):
            yield tuple(self.assign)
            return
        v = self.order[i]
        if v in self.fixed:
            values = (self.fixed[v],)
        elif self.symmetric and i == 0:
            values = (0,)
        else:
            values = (0, 1)
        for p in values:
            same = self._can_place(v, p)
            if same is None:
                continue
            self._place(v, p, same)
            yield from self._rec(i + 1)
            self._unplace(v, p, same)


def solve(
    g: PlaneGraph,
    specs: tuple[PartSpec, PartSpec] = F3F4,
    cap: int = DEFAULT_CAP,
    fixed: dict[int, int] | None = None,
) -> Partition | None:
    """Exact backtracking search.  Returns None when no partition exists.

    ``fixed`` pins some vertices to parts; the search is exhaustive over
    the others.
    """
    free = g.n - len(fixed or {})
    if free > cap:
        raise TooLarge(f"{free} free vertices exceeds solver cap {cap}")
    if g.n + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(g.n + 100)
    for assignment in _Search(g, specs, fixed).run():
        return Partition(assignment, specs)
    return None


def count_or_enumerate(
    g: PlaneGraph,
    specs: tuple[PartSpec, PartSpec] = F3F4,
    limit: int = 0,
) -> tuple[int, list[Partition]]:
    """Count valid partitions by checking all 2^n assignments."""
    if g.n > ENUMERATE_CAP:
        raise TooLarge(f"{g.n} vertices exceeds enumeration cap {ENUMERATE_CAP}")
    count = 0
    found: list[Partition] = []
    for assignment in itertools.product((0, 1), repeat=g.n):
        if verify(g, assignment, specs) is None:
            count += 1
            if len(found) < limit:
                found.append(Partition(assignment, specs))
    return count, found
