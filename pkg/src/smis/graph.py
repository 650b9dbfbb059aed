"""Undirected simple graphs stored as per-vertex bit rows.

Vertices are the integers ``0 .. n-1``.  Row ``u`` is a Python int whose
bit ``v`` is set iff ``u`` and ``v`` are adjacent.  Graph values are
immutable; equality is label-sensitive (same ``n``, same rows).

Also holds the two interchange formats: graph6 and a plain edge-list text.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 4096


class GraphError(ValueError):
    """Invalid graph construction or selection."""


class Graph6Error(GraphError):
    """Base class for graph6 decoding failures."""


class MalformedHeader(Graph6Error):
    pass


class TruncatedBody(Graph6Error):
    pass


class NonPrintableByte(Graph6Error):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} has bits at positions >= n")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    def adj(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense ``uint8`` adjacency matrix (read-only)."""
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        a.setflags(write=False)
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_matrix(a) -> Graph:
    a = np.asarray(a)
    n = a.shape[0]
    us, vs = np.nonzero(np.triu(a, 1))
    return from_edge_list(n, zip(us.tolist(), vs.tolist()))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` followed by ``h`` with ``h``'s vertices shifted by ``g.n``."""
    return Graph(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def induced(g: Graph, vs: Sequence[int]) -> Graph:
    """Induced subgraph on ``vs``; vertex ``i`` of the result is ``vs[i]``."""
    if len(set(vs)) != len(vs):
        raise GraphError(f"duplicate vertex in selection {tuple(vs)}")
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside [0, {g.n})")
    rows = []
    for a in vs:
        row_a = g.rows[a]
        r = 0
        for j, b in enumerate(vs):
            if row_a >> b & 1:
                r |= 1 << j
        rows.append(r)
    return Graph(len(vs), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << u) for u, r in enumerate(g.rows)))


# -- named graphs ---------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    return complement(empty_graph(n))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    return from_edge_list(n, ((v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)))


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return from_edge_list(rows * cols, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return from_matrix(upper | upper.T)


# -- graph6 ---------------------------------------------------------------

def emit_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 (no header, no trailing newline)."""
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    elif n <= 258047:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    else:
        raise GraphError(f"graph6 size prefix cannot encode n={n}")
    group = 0
    filled = 0
    for v in range(1, n):
        row = g.rows[v]
        for u in range(v):
            group = group << 1 | (row >> u & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record.  A ``>>graph6<<`` header and surrounding
    whitespace are tolerated."""
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise MalformedHeader("empty graph6 record")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise NonPrintableByte(f"byte {byte!r} at offset {pos} outside 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] == 126:
        raise MalformedHeader("8-byte size prefix (n > 258047) not supported")
    else:
        if len(data) < 4:
            raise MalformedHeader("truncated 4-byte size prefix")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    if n > MAX_VERTICES:
        raise MalformedHeader(f"declared n={n} exceeds cap {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise TruncatedBody(f"n={n} needs {need} body bytes, got {len(body)}")
    if len(body) > need:
        raise MalformedHeader(f"n={n} needs {need} body bytes, got {len(body)}")
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if (body[idx // 6] - 63) >> (5 - idx % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(rows))


# -- edge-list text -------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    tokens: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            tokens.append((lineno, line.split()))
    if not tokens:
        raise GraphError("edge list: missing 'n m' header")
    lineno, head = tokens[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphError(f"edge list line {lineno}: expected 'n m', got {' '.join(head)!r}") from None
    if len(tokens) - 1 != m:
        raise GraphError(f"edge list: header declares {m} edges, found {len(tokens) - 1}")
    edges = []
    for lineno, parts in tokens[1:]:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphError(f"edge list line {lineno}: expected 'u v', got {' '.join(parts)!r}") from None
        edges.append((u, v))
    return from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"
