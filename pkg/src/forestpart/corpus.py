"""Test corpora of planar graphs without 4- and 5-cycles.

Three sources: exhaustive enumeration of small connected class members,
random block assemblies (every cycle stays inside one block, so class
membership holds by construction), and file ingestion.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import networkx as nx

from .errors import TooLarge
from .formats import ingest  # noqa: F401  (re-exported corpus source)
from .planegraph import PlaneGraph, adjacency_has_cycle, build, from_rotation

EXHAUSTIVE_CAP = 7

# -- exhaustive ------------------------------------------------------------


def _in_class_edges(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if adjacency_has_cycle(adj, 4) or adjacency_has_cycle(adj, 5):
        return False
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.check_planarity(g)[0]


def _bucket_key(n: int, edges: Sequence[tuple[int, int]]) -> tuple:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return (n, len(edges), tuple(sorted(deg)))


class _IsoDedup:
    """Keeps one representative per isomorphism class."""

    def __init__(self):
        self.buckets: dict[tuple, list[nx.Graph]] = {}
        self.kept: list[tuple[int, tuple[tuple[int, int], ...]]] = []

    def add(self, n: int, edges: Sequence[tuple[int, int]]) -> bool:
        key = _bucket_key(n, edges)
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(edges)
        bucket = self.buckets.setdefault(key, [])
        if any(nx.is_isomorphic(g, h) for h in bucket):
            return False
        bucket.append(g)
        self.kept.append((n, tuple(sorted(edges))))
        return True


def enumerate_edge_lists(n_max: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """Connected class members on 1..n_max vertices, one per isomorphism class.

    Every connected graph has a vertex whose removal leaves it connected
    and the class is closed under vertex deletion, so extending each
    member on n-1 vertices by a new vertex with every non-empty
    neighbourhood reaches all members on n vertices.
    """
    if n_max > EXHAUSTIVE_CAP:
        raise TooLarge(f"exhaustive enumeration is capped at n <= {EXHAUSTIVE_CAP}")
    if n_max < 1:
        return []
    levels = [[(1, ())]]
    for n in range(2, n_max + 1):
        dedup = _IsoDedup()
        new = n - 1
        for _, edges in levels[-1]:
            for mask in range(1, 1 << new):
                extra = tuple((u, new) for u in range(new) if mask >> u & 1)
                cand = edges + extra
                if _in_class_edges(n, cand):
                    dedup.add(n, cand)
        levels.append(dedup.kept)
    return [item for level in levels for item in level]


def enumerate_exhaustive(n_max: int) -> Iterator[PlaneGraph]:
    for n, edges in enumerate_edge_lists(n_max):
        yield build(edges, n=n)


# -- random block assemblies ----------------------------------------------

BLOCKS = ("edge", "triangle", "C6", "C7", "hex-patch")


def _cycle(k: int) -> PlaneGraph:
    return build([(i, (i + 1) % k) for i in range(k)], n=k)


def hex_patch(rows: int, cols: int) -> PlaneGraph:
    """A patch of the hexagonal lattice with its straight-line rotation."""
    h = nx.hexagonal_lattice_graph(rows, cols)
    nodes = sorted(h.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    pos = nx.get_node_attributes(h, "pos")
    rotation = []
    for v in nodes:
        x0, y0 = pos[v]
        nbrs = sorted(h[v], key=lambda u: math.atan2(pos[u][1] - y0, pos[u][0] - x0))
        rotation.append([index[u] for u in nbrs])
    return from_rotation(rotation)


TEMPLATES: dict[str, PlaneGraph] = {
    "edge": build([(0, 1)]),
    "triangle": _cycle(3),
    "C6": _cycle(6),
    "C7": _cycle(7),
}
HEX_SHAPES = ((1, 1), (1, 2), (2, 1), (2, 2))


def _best_slot(g: PlaneGraph, v: int) -> int:
    """Insertion index in the rotation at ``v`` lying in the largest face.

    Index j sits between ``rotation[j-1]`` and ``rotation[j]``, a corner of
    the face traced by the dart ``(v, rotation[j-1])``.
    """
    rot = g.rotation[v]
    if not rot:
        return 0
    best = max(range(len(rot)), key=lambda j: (g.face_deg(g.dart_face[(v, rot[j - 1])]), -j))
    return best


class Assembly:
    """Grows a plane graph by gluing blocks at vertices or joining them by
    bridges, always inside the largest face at the attachment corner so
    small faces of earlier blocks survive."""

    def __init__(self, first: PlaneGraph):
        self.graph = first

    @property
    def n(self) -> int:
        return self.graph.n

    def _splice(self, block: PlaneGraph, at: int, local: int, bridge: bool) -> list[int]:
        host = self.graph
        # dense relabel of block vertices
        ids = []
        nxt = host.n
        for u in range(block.n):
            if not bridge and u == local:
                ids.append(at)
            else:
                ids.append(nxt)
                nxt += 1
        j = _best_slot(host, at)
        t = _best_slot(block, local)
        brot = [[ids[w] for w in block.rotation[u]] for u in range(block.n)]
        rotation = [list(r) for r in host.rotation] + [[] for _ in range(nxt - host.n)]
        for u in range(block.n):
            if ids[u] != at:
                rotation[ids[u]] = brot[u]
        if bridge:
            s = brot[local]
            rotation[ids[local]] = s[:t] + [at] + s[t:]
            rotation[at] = rotation[at][:j] + [ids[local]] + rotation[at][j:]
        else:
            s = brot[local]
            seq = s[t:] + s[:t]
            rotation[at] = rotation[at][:j] + seq + rotation[at][j:]
        self.graph = from_rotation(rotation)
        return ids

    def glue(self, block: PlaneGraph, at: int, local: int = 0) -> list[int]:
        """Identify block vertex ``local`` with host vertex ``at``."""
        return self._splice(block, at, local, bridge=False)

    def bridge(self, block: PlaneGraph, at: int, local: int = 0) -> list[int]:
        """Join host vertex ``at`` to block vertex ``local`` by a new edge."""
        return self._splice(block, at, local, bridge=True)


def terrible_gadget() -> PlaneGraph:
    """Triangle on vertex 0 whose other two vertices carry a pendant leaf,
    making both 3-vertices with pendent 1-neighbours."""
    a = Assembly(TEMPLATES["triangle"])
    a.glue(TEMPLATES["edge"], 1)
    a.glue(TEMPLATES["edge"], 2)
    return a.graph


def bad_vertex_gadget(d: int) -> tuple[PlaneGraph, int, int]:
    """Gadget with a bad d-vertex, d in {6, 7, 8}.

    Returns ``(graph, bad_vertex, attach_vertex)``.  The bad vertex lies on
    d-5 terrible faces and on one triangle with a 2-vertex whose third
    vertex is the attachment vertex; its remaining neighbours are leaves.
    """
    if d not in (6, 7, 8):
        raise ValueError("bad vertices have degree 6, 7 or 8")
    a = Assembly(TEMPLATES["triangle"])  # v=0, u=1 (stays a 2-vertex), w=2
    v, w = 0, 2
    for _ in range(d - 5):
        ids = a.glue(TEMPLATES["triangle"], v)
        for x in ids[1:]:
            a.glue(TEMPLATES["edge"], x)
    for _ in range(8 - d):
        a.glue(TEMPLATES["edge"], v)
    return a.graph, v, w


def _star(k: int) -> PlaneGraph:
    return build([(0, i) for i in range(1, k + 1)], n=k + 1)


def _leaves(a: Assembly, v: int, k: int) -> None:
    for _ in range(k):
        a.glue(TEMPLATES["edge"], v)


def _terrible_at(a: Assembly, v: int) -> None:
    """Glue a triangle at v whose other two vertices get a leaf each."""
    ids = a.glue(TEMPLATES["triangle"], v)
    for x in ids[1:]:
        a.glue(TEMPLATES["edge"], x)


def config_examples() -> dict[str, PlaneGraph]:
    """One small class member per configuration kind C2..C13 on which that
    kind's detector fires (other kinds may fire too)."""
    out = {"C2": TEMPLATES["edge"], "C3": build([(0, 1), (1, 2)])}
    a = Assembly(TEMPLATES["triangle"])  # (x, y, z) = (2, 0, 1)
    _leaves(a, 0, 3)
    out["C4"] = a.graph
    out["C5"] = terrible_gadget()
    a = Assembly(_star(5))
    a.glue(TEMPLATES["edge"], 1)
    out["C6"] = a.graph
    a = Assembly(_star(5))
    for leaf in range(1, 6):
        a.glue(TEMPLATES["triangle"], leaf)
    out["C7"] = a.graph
    out["C8"] = bad_vertex_gadget(6)[0]
    # triangle (0, 1, 2) with 2 a 2-vertex and both 0 and 1 bad 6-vertices
    a = Assembly(TEMPLATES["triangle"])
    for v in (0, 1):
        _terrible_at(a, v)
        _leaves(a, v, 2)
    out["C9"] = a.graph
    a = Assembly(TEMPLATES["triangle"])
    _terrible_at(a, 0)
    a.glue(TEMPLATES["triangle"], 0)
    out["C10"] = a.graph
    a = Assembly(TEMPLATES["edge"])
    _terrible_at(a, 0)
    _terrible_at(a, 0)
    _leaves(a, 0, 1)
    out["C11"] = a.graph
    a = Assembly(TEMPLATES["edge"])
    _terrible_at(a, 0)
    _leaves(a, 0, 3)
    out["C12"] = a.graph
    # 7-vertex 0 on the F2*-face (0, 1, 2): 1 is a 2-vertex and 2 a 5-vertex
    a = Assembly(TEMPLATES["triangle"])
    _leaves(a, 2, 3)
    _terrible_at(a, 0)
    _leaves(a, 0, 3)
    out["C13"] = a.graph
    return out


@dataclass
class CorpusSpec:
    mode: str = "gadget"  # exhaustive | gadget | ingest
    n_max: int = 20
    seed: int = 42
    block_mix: dict[str, float] = field(
        default_factory=lambda: {"edge": 1.0, "triangle": 2.0, "C6": 1.0, "C7": 1.0, "hex-patch": 1.0}
    )
    count: int = 100
    decorate: float = 0.5  # probability of adding a terrible-face or bad-vertex gadget
    n_min: int = 3

    def __post_init__(self):
        if self.mode == "exhaustive" and self.n_max > EXHAUSTIVE_CAP:
            raise TooLarge(f"exhaustive mode needs n_max <= {EXHAUSTIVE_CAP}")
        unknown = set(self.block_mix) - set(BLOCKS)
        if unknown:
            raise ValueError(f"unknown block types {sorted(unknown)}")


def parse_mix(text: str) -> dict[str, float]:
    """``"triangle=2,C6=1"`` -> weights."""
    out = {}
    for item in text.split(","):
        name, _, weight = item.partition("=")
        out[name.strip()] = float(weight) if weight else 1.0
    return out


def _pick_block(rng: random.Random, mix: dict[str, float], budget: int) -> PlaneGraph | None:
    names = [b for b in BLOCKS if mix.get(b, 0) > 0]
    options: list[tuple[PlaneGraph, float]] = []
    for name in names:
        if name == "hex-patch":
            shapes = [hex_patch(*s) for s in HEX_SHAPES]
            fitting = [s for s in shapes if s.n - 1 <= budget]
            if fitting:
                options.append((rng.choice(fitting), mix[name]))
        elif TEMPLATES[name].n - 1 <= budget:
            options.append((TEMPLATES[name], mix[name]))
    if not options:
        return None
    blocks, weights = zip(*options)
    return rng.choices(blocks, weights)[0]


def _decorate(rng: random.Random, asm: Assembly, budget: int) -> None:
    choices = [("terrible", terrible_gadget().n - 1)]
    for d in (6, 7, 8):
        choices.append((f"bad{d}", bad_vertex_gadget(d)[0].n - 1))
    fitting = [c for c, size in choices if size <= budget]
    if not fitting:
        return
    kind = rng.choice(fitting)
    at = rng.randrange(asm.n)
    if kind == "terrible":
        asm.glue(terrible_gadget(), at, 0)
    else:
        gadget, _, attach = bad_vertex_gadget(int(kind[3:]))
        asm.glue(gadget, at, attach)


def generate_gadget(spec: CorpusSpec) -> Iterator[PlaneGraph]:
    """Random block assemblies; deterministic for a fixed ``spec.seed``."""
    rng = random.Random(spec.seed)
    hex_only = {k for k, w in spec.block_mix.items() if w > 0} == {"hex-patch"}
    for _ in range(spec.count):
        if hex_only:
            # a single patch keeps the result a subgraph of the lattice
            shapes = [(r, c) for r in range(1, 5) for c in range(1, 5)]
            fitting = [s for s in shapes if hex_patch(*s).n <= spec.n_max] or [(1, 1)]
            yield hex_patch(*rng.choice(fitting))
            continue
        target = rng.randint(min(spec.n_min, spec.n_max), spec.n_max)
        first = _pick_block(rng, spec.block_mix, spec.n_max - 1) or build([], n=1)
        asm = Assembly(first)
        if spec.decorate > 0 and rng.random() < spec.decorate:
            _decorate(rng, asm, spec.n_max - asm.n)
        while asm.n < target:
            budget = spec.n_max - asm.n
            block = _pick_block(rng, spec.block_mix, budget)
            if block is None:
                break
            at = rng.randrange(asm.n)
            local = rng.randrange(block.n)
            if block.n > budget or rng.random() < 0.6:
                asm.glue(block, at, local)
            else:
                asm.bridge(block, at, local)
        yield asm.graph


# -- slow reference path ----------------------------------------------------


def brute_force_edge_lists(n_max: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """Same output class as :func:`enumerate_edge_lists`, by filtering every
    edge subset of K_n.  Only practical for n <= 5."""
    out = []
    for n in range(1, n_max + 1):
        dedup = _IsoDedup()
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g) and _in_class_edges(n, edges):
                dedup.add(n, edges)
        out.extend(dedup.kept)
    return out


# -- greedy subgraphs of random triangulations -----------------------------


def _has_short_path(adj: list[set[int]], a: int, b: int, lengths: tuple[int, ...]) -> bool:
    """True iff some simple a-b path has a length in ``lengths``."""
    longest = max(lengths)
    stack = [(a, 0, frozenset([a]))]
    while stack:
        u, k, seen = stack.pop()
        if k >= longest:
            continue
        for w in adj[u]:
            if w == b:
                if k + 1 in lengths:
                    return True
                continue
            if w not in seen:
                stack.append((w, k + 1, seen | {w}))
    return False


def _strip_low(adj: list[set[int]], level: int = 2) -> list[bool]:
    """Repeatedly delete 1--vertices and, at level 2, 2-vertices with a
    4--neighbour."""
    alive = [True] * len(adj)
    changed = True
    while changed:
        changed = False
        for v in range(len(adj)):
            if not alive[v]:
                continue
            d = len(adj[v])
            if d <= 1 or (level >= 2 and d == 2 and any(len(adj[u]) <= 4 for u in adj[v])):
                for u in adj[v]:
                    adj[u].discard(v)
                adj[v] = set()
                alive[v] = False
                changed = True
    return alive


def generate_greedy(count: int, n_points: int, seed: int, strip: int = 0) -> Iterator[PlaneGraph]:
    """Maximal 4-/5-cycle-free subgraphs of random Delaunay triangulations.

    Edges of the triangulation are offered in random order and kept unless
    they close a 4- or 5-cycle.  With ``strip`` set, vertices forming the
    two simplest configurations are peeled off repeatedly, which leaves
    denser, harder instances (``strip=1`` peels only 1--vertices).
    Yields the largest component of each.
    """
    from scipy.spatial import Delaunay

    rng = random.Random(seed)
    for _ in range(count):
        pts = [(rng.random(), rng.random()) for _ in range(n_points)]
        tri = Delaunay(pts)
        cand = set()
        for s in tri.simplices:
            a, b, c = (int(t) for t in s)
            cand |= {(min(a, b), max(a, b)), (min(b, c), max(b, c)), (min(a, c), max(a, c))}
        cand = sorted(cand)
        rng.shuffle(cand)
        adj: list[set[int]] = [set() for _ in range(n_points)]
        for u, v in cand:
            if not _has_short_path(adj, u, v, (3, 4)):
                adj[u].add(v)
                adj[v].add(u)
        alive = _strip_low(adj, strip) if strip else [True] * n_points
        # largest component among surviving vertices
        best: list[int] = []
        seen = [not a for a in alive]
        for s in range(n_points):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            if len(comp) > len(best):
                best = comp
        if not best:
            continue
        keep = sorted(best)
        index = {v: i for i, v in enumerate(keep)}
        rotation = []
        for v in keep:
            x0, y0 = pts[v]
            nbrs = sorted(adj[v], key=lambda u: math.atan2(pts[u][1] - y0, pts[u][0] - x0))
            rotation.append([index[u] for u in nbrs])
        yield from_rotation(rotation)


# -- local search for graphs avoiding chosen configurations ----------------


def _witnesses(g: PlaneGraph, kinds: Sequence[str]) -> list:
    from .classify import classify
    from .configs import detect

    cls = classify(g)
    return [w for k in kinds for w in detect(g, cls, k)]


def hunt(
    avoid: Sequence[str] = ("C1", "C2", "C3"),
    seed: int = 0,
    steps: int = 5000,
    n_max: int = 40,
    n_min: int = 12,
) -> Iterator[PlaneGraph]:
    """Random local search over class members, yielding every accepted
    graph that contains no configuration of the kinds in ``avoid``.

    Moves add a triangle ear on an edge, add a vertex with one to three
    neighbours (often next to a vertex of a current witness), add an
    edge, or delete a vertex (often a witness's deletion vertex).  A move
    is kept only if the graph stays connected, planar and free of 4- and
    5-cycles, and is accepted when it does not increase the number of
    avoided witnesses.  Deletions are refused below ``n_min`` vertices so
    the search cannot escape by shrinking.
    """
    rng = random.Random(seed)
    start = next(generate_greedy(1, n_min + 4, seed=rng.randrange(2**32)))
    cur = start.to_networkx()
    cur_wit = _witnesses(start, avoid)
    for _ in range(steps):
        h = cur.copy()
        n = h.number_of_nodes()
        adj = [set(h[v]) for v in range(n)]
        focus = [u for w in cur_wit for u in w.vertices]
        r = rng.random()
        if r < 0.2 and n < n_max and h.number_of_edges():
            u, v = rng.choice(list(h.edges))
            if _has_short_path(adj, u, v, (2, 3)):
                continue
            h.add_edges_from([(n, u), (n, v)])
        elif r < 0.6 and n < n_max:
            k = rng.choice((2, 3, 3))
            nbrs = rng.sample(range(n), min(n, k))
            if focus and rng.random() < 0.7:
                nbrs[0] = rng.choice(focus)
            nbrs = sorted(set(nbrs))
            if any(_has_short_path(adj, a, b, (2, 3)) for a in nbrs for b in nbrs if a < b):
                continue
            h.add_node(n)
            h.add_edges_from((n, s) for s in nbrs)
        elif r < 0.8:
            u, v = rng.sample(range(n), 2)
            if focus and rng.random() < 0.7:
                u = rng.choice(focus)
            if u == v or h.has_edge(u, v) or _has_short_path(adj, u, v, (3, 4)):
                continue
            h.add_edge(u, v)
        else:
            if n <= n_min:
                continue
            dels = [w.delete_vertex for w in cur_wit if w.delete_vertex is not None]
            h.remove_node(rng.choice(dels) if dels and rng.random() < 0.7 else rng.randrange(n))
            if not nx.is_connected(h):
                continue
            h = nx.convert_node_labels_to_integers(h)
        if not nx.check_planarity(h)[0]:
            continue
        g = build(list(h.edges), n=h.number_of_nodes())
        wit = _witnesses(g, avoid)
        if len(wit) <= len(cur_wit) or rng.random() < 0.03:
            cur, cur_wit = h, wit
            if not wit:
                yield g
