"""Charge bookkeeping for the discharging argument.

Charges are kept as integers counting half units, so every amount and
total is exact.  A vertex of degree d starts with ``2d - 6`` and a face of
degree k with ``k - 6``; by Euler's formula the total over a connected
plane graph is -12.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .classify import Classification, classify
from .configs import ConfigWitness, find_any
from .errors import NotInClass
from .planegraph import PlaneGraph, class_membership

Element = tuple[str, int]  # ("v", id) or ("f", id)
HALF = 2  # half units per unit of charge


@dataclass(frozen=True)
class Transfer:
    source: Element
    target: Element
    amount: int  # half units
    rule: str

    def to_dict(self) -> dict:
        return {
            "source": _name(self.source),
            "target": _name(self.target),
            "amount": _value(self.amount),
            "rule": self.rule,
        }


def _name(z: Element) -> str:
    return f"{z[0]}{z[1]}"


def _value(halves: int) -> int | float:
    return halves // 2 if halves % 2 == 0 else halves / 2


@dataclass
class ChargeLedger:
    initial: dict[Element, int]
    transfers: list[Transfer] = field(default_factory=list)

    @property
    def final(self) -> dict[Element, int]:
        out = dict(self.initial)
        for t in self.transfers:
            out[t.source] -= t.amount
            out[t.target] += t.amount
        return out

    def total_initial(self) -> int:
        return sum(self.initial.values())

    def total_final(self) -> int:
        return sum(self.final.values())

    def negative_elements(self) -> list[Element]:
        return sorted(z for z, c in self.final.items() if c < 0)

    def to_dict(self) -> dict:
        final = self.final
        return {
            "initial": {_name(z): _value(c) for z, c in self.initial.items()},
            "transfers": [t.to_dict() for t in self.transfers],
            "final": {_name(z): _value(c) for z, c in final.items()},
            "totals": {"initial": _value(self.total_initial()), "final": _value(sum(final.values()))},
        }


class PendentMode(str, Enum):
    PER_RECORD = "per-record"
    PER_FACE = "per-face"


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    g.require_connected()
    initial: dict[Element, int] = {}
    for v in range(g.n):
        initial[("v", v)] = HALF * (2 * g.deg(v) - 6)
    for f in range(len(g.faces)):
        initial[("f", f)] = HALF * (g.face_deg(f) - 6)
    return ChargeLedger(initial)


def _rule_transfers(g: PlaneGraph, cls: Classification, mode: PendentMode) -> Iterator[Transfer]:
    deg = g.degrees

    def send(src: Element, dst: Element, units: float, rule: str) -> Transfer:
        return Transfer(src, dst, int(units * HALF), rule)

    # R1
    for v in range(g.n):
        if deg[v] in (4, 5):
            for f in g.vertex_triangles(v):
                yield send(("v", v), ("f", f), 1, "R1")
    # R2
    for v in range(g.n):
        if deg[v] >= 5:
            for u in g.rotation[v]:
                if u in cls.w2:
                    yield send(("v", v), ("v", u), 1, "R2")
    # R3
    for v in range(g.n):
        if deg[v] < 5:
            continue
        recs = cls.pendent_by_owner.get(v, ())
        if mode is PendentMode.PER_FACE:
            seen: set[int] = set()
            recs = tuple(r for r in recs if not (r.face in seen or seen.add(r.face)))
        for rec in recs:
            if deg[v] == 5:
                if max(deg[u] for u in g.faces[rec.face]) <= 5:
                    yield send(("v", v), ("f", rec.face), 1, "R3a")
                else:
                    yield send(("v", v), ("f", rec.face), 0.5, "R3b")
            else:
                yield send(("v", v), ("f", rec.face), 1, "R3c")
    # R4
    for v in range(g.n):
        if not 6 <= deg[v] <= 10:
            continue
        for f in g.vertex_triangles(v):
            if not cls.in_f2_or_f3(f):
                yield send(("v", v), ("f", f), 1, "R4a")
            elif f in cls.terrible:
                yield send(("v", v), ("f", f), 3, "R4c")
            elif f in cls.f2_star:
                if v in cls.bad:
                    yield send(("v", v), ("f", f), 2, "R4d")
                else:
                    yield send(("v", v), ("f", f), 3, "R4e")
            else:
                yield send(("v", v), ("f", f), 2, "R4b")
    # R5
    for v in range(g.n):
        if deg[v] >= 11:
            for f in g.vertex_triangles(v):
                yield send(("v", v), ("f", f), 3, "R5")
    # R6
    for f in g.triangles:
        if cls.in_f2_or_f3(f) and f not in cls.terrible:
            for u in g.faces[f]:
                if deg[u] == 2 or u in cls.bad:
                    yield send(("f", f), ("v", u), 1, "R6")
    # R7: once per occurrence on the boundary walk
    for f, walk in enumerate(g.faces):
        if len(walk) >= 7:
            for u in walk:
                if deg[u] == 2 and u not in cls.w2:
                    yield send(("f", f), ("v", u), 1, "R7")


def apply_rules(
    g: PlaneGraph,
    cls: Classification | None = None,
    pendent_mode: PendentMode | str = PendentMode.PER_RECORD,
) -> ChargeLedger:
    """Initial charges plus every rule transfer, in rule order R1..R7."""
    ledger = initial_charges(g)
    if cls is None:
        cls = classify(g)
    ledger.transfers = list(_rule_transfers(g, cls, PendentMode(pendent_mode)))
    return ledger


class Verdict(str, Enum):
    PASS = "PASS"
    PROOF_VIOLATION = "PROOF_VIOLATION"
    FAIL = "FAIL"  # conservation or total check failed


@dataclass
class AuditReport:
    ledger: ChargeLedger
    conservation: bool
    total_ok: bool
    negative_elements: list[Element]
    config: ConfigWitness | None

    @property
    def verdict(self) -> Verdict:
        if not (self.conservation and self.total_ok):
            return Verdict.FAIL
        if self.negative_elements and self.config is None:
            return Verdict.PROOF_VIOLATION
        return Verdict.PASS

    def to_dict(self, include_ledger: bool = True) -> dict:
        out = {
            "conservation": self.conservation,
            "total_is_minus_12": self.total_ok,
            "negative_elements": [_name(z) for z in self.negative_elements],
            "configs_found": self.config.to_dict() if self.config else None,
            "verdict": self.verdict.value,
        }
        if include_ledger:
            out = {**self.ledger.to_dict(), **out}
        return out


def audit(g: PlaneGraph, pendent_mode: PendentMode | str = PendentMode.PER_RECORD) -> AuditReport:
    g.require_connected()
    if not class_membership(g).in_class:
        raise NotInClass("audit requires a planar graph without 4- and 5-cycles")
    cls = classify(g)
    ledger = apply_rules(g, cls, pendent_mode)
    final = ledger.final
    return AuditReport(
        ledger=ledger,
        conservation=sum(final.values()) == ledger.total_initial(),
        total_ok=ledger.total_initial() == -12 * HALF,
        negative_elements=sorted(z for z, c in final.items() if c < 0),
        config=find_any(g, cls),
    )
