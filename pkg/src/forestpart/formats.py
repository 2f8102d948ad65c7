"""Readers and writers for the ``rotgraph v1`` text format and planar_code.

rotgraph v1 (one or more graphs per file, ``#`` starts a comment)::

    n m
    0: 1 2 3        # neighbours of vertex 0 in counterclockwise order
    ...

or, without an embedding, ``m`` lines ``u v`` after the header; such
graphs are embedded on reading.

planar_code follows the plantri convention: the 15-byte header
``>>planar_code<<``, then per graph one byte ``n`` and, for every vertex
1..n, its neighbours (1-based, clockwise) terminated by a zero byte.
Only the 1-byte variant (n <= 255) is supported.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import ForestPartError, ParseError
from .planegraph import PlaneGraph, build, from_rotation

PLANAR_CODE_HEADER = b">>planar_code<<"


def write_rotgraph(g: PlaneGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{v}: " + " ".join(map(str, g.rotation[v])) if g.rotation[v] else f"{v}:" for v in range(g.n)]
    return "\n".join(lines) + "\n"


def dumps_rotgraph(graphs: Iterable[PlaneGraph]) -> str:
    return "".join(write_rotgraph(g) for g in graphs)


def _logical_lines(text: str) -> list[tuple[int, str]]:
    out = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((offset, line))
        offset += len(raw.encode())
    return out


def read_rotgraph(text: str) -> Iterator[PlaneGraph]:
    lines = _logical_lines(text)
    i = 0
    while i < len(lines):
        offset, header = lines[i]
        try:
            n, m = (int(t) for t in header.split())
        except ValueError:
            raise ParseError(f"expected header 'n m', got {header!r}", offset) from None
        i += 1
        if n > 0 and i < len(lines) and ":" in lines[i][1]:
            if i + n > len(lines):
                raise ParseError("truncated rotation section", lines[-1][0])
            rotation: list[list[int] | None] = [None] * n
            for offset, line in lines[i:i + n]:
                head, _, rest = line.partition(":")
                try:
                    v = int(head)
                    rotation[v] = [int(t) for t in rest.split()]
                except (ValueError, IndexError):
                    raise ParseError(f"bad rotation line {line!r}", offset) from None
            i += n
            if any(r is None for r in rotation):
                raise ParseError("rotation section does not list every vertex", offset)
            try:
                g = from_rotation(rotation)
            except ForestPartError as exc:
                raise ParseError(str(exc), offset) from exc
        else:
            if i + m > len(lines):
                raise ParseError("truncated edge section", lines[-1][0])
            edges = []
            for offset, line in lines[i:i + m]:
                try:
                    u, v = (int(t) for t in line.split())
                except ValueError:
                    raise ParseError(f"bad edge line {line!r}", offset) from None
                edges.append((u, v))
            i += m
            try:
                g = build(edges, n=n)
            except ForestPartError as exc:
                raise ParseError(str(exc), offset) from exc
        if g.m != m:
            raise ParseError(f"header says {m} edges, found {g.m}", offset)
        yield g


def write_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for g in graphs:
        if not 0 < g.n <= 255:
            raise ValueError("planar_code 1-byte format needs 1..255 vertices")
        out.append(g.n)
        for v in range(g.n):
            out.extend(u + 1 for u in reversed(g.rotation[v]))
            out.append(0)
    return bytes(out)


def read_planar_code(data: bytes) -> Iterator[PlaneGraph]:
    if not data.startswith(PLANAR_CODE_HEADER):
        raise ParseError("missing >>planar_code<< header", 0)
    pos = len(PLANAR_CODE_HEADER)
    while pos < len(data):
        start = pos
        n = data[pos]
        pos += 1
        if n == 0:
            raise ParseError("2-byte planar_code records are not supported", start)
        rotation = []
        for _ in range(n):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise ParseError("truncated planar_code record", pos)
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise ParseError(f"neighbour {b} out of range 1..{n}", pos - 1)
                nbrs.append(b - 1)
            rotation.append(list(reversed(nbrs)))
        try:
            yield from_rotation(rotation)
        except ForestPartError as exc:
            raise ParseError(str(exc), start) from exc


def ingest(path: str | Path) -> Iterator[PlaneGraph]:
    """Stream graphs from a planar_code or rotgraph file (sniffed by header)."""
    data = Path(path).read_bytes()
    if data.startswith(PLANAR_CODE_HEADER):
        yield from read_planar_code(data)
    else:
        try:
            text = data.decode()
        except UnicodeDecodeError as exc:
            raise ParseError("file is neither planar_code nor UTF-8 text", exc.start) from None
        yield from read_rotgraph(text)
