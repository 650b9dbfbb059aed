"""Fixed-width bit codes for labeled k-vertex graphs, and their streaming
enumeration over ordered tuples of distinct host vertices.

Bit layout (frozen): the pair ``(i, j)`` with ``i > j`` lives at bit
``C(i, 2) + j``.  Appending vertex ``i`` to a tuple therefore fills the
contiguous block of ``i`` bits starting at ``C(i, 2)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .graph import Graph, GraphError

MAX_ORDER = 22


def pair_bit(i: int, j: int) -> int:
    if i < j:
        i, j = j, i
    return comb(i, 2) + j


def width(k: int) -> int:
    return k * (k - 1) // 2


@dataclass(frozen=True, order=True)
class SubgraphCode:
    k: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < 1 << width(self.k):
            raise ValueError(f"bits {self.bits:#x} do not fit k={self.k}")

    @property
    def hex(self) -> str:
        return format(self.bits, "x")

    def __str__(self) -> str:
        return f"k={self.k} code={self.hex}"


@dataclass
class SmisResult:
    """A smallest missing induced subgraph; ``method`` is ``engine`` or ``oracle``."""

    k: int
    missing: Graph
    code: SubgraphCode
    method: str = "engine"
    counts_examined: dict[int, int] = field(default_factory=dict)


def clique_code(k: int) -> SubgraphCode:
    return SubgraphCode(k, (1 << width(k)) - 1)


def _check_order(k: int) -> None:
    if not 2 <= k <= MAX_ORDER:
        raise GraphError(f"subgraph order {k} outside [2, {MAX_ORDER}]")


def encode_tuple(g: Graph, vs: Sequence[int]) -> SubgraphCode:
    _check_order(len(vs))
    if len(set(vs)) != len(vs):
        raise GraphError(f"duplicate vertex in tuple {tuple(vs)}")
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside [0, {g.n})")
    bits = 0
    for i in range(1, len(vs)):
        row = g.rows[vs[i]]
        base = comb(i, 2)
        for j in range(i):
            if row >> vs[j] & 1:
                bits |= 1 << (base + j)
    return SubgraphCode(len(vs), bits)


def encode(g: Graph) -> SubgraphCode:
    """Code of ``g`` under its own vertex order (any ``k >= 0``)."""
    bits = 0
    for i in range(1, g.n):
        row = g.rows[i]
        base = comb(i, 2)
        for j in range(i):
            if row >> j & 1:
                bits |= 1 << (base + j)
    return SubgraphCode(g.n, bits)


def decode(c: SubgraphCode) -> Graph:
    rows = [0] * c.k
    for i in range(1, c.k):
        base = comb(i, 2)
        for j in range(i):
            if c.bits >> (base + j) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(c.k, tuple(rows))


def stream_codes(g: Graph, k: int, visit: Callable[[tuple[int, ...], SubgraphCode], None]) -> int:
    """Call ``visit(tuple, code)`` for every ordered tuple of ``k`` distinct
    vertices, in lexicographic order.  Returns the number of visits.

    A stack of prefix codes is kept, so moving to the next tuple only
    re-encodes the positions from the deepest changed one onward.
    """
    _check_order(k)
    n = g.n
    if n < k:
        return 0
    rows = g.rows
    bases = [comb(i, 2) for i in range(k)]
    tup = [0] * k
    prefix = [0] * (k + 1)
    nxt = [0] * k
    used = 0
    visits = 0
    d = 0
    while d >= 0:
        v = nxt[d]
        while v < n and used >> v & 1:
            v += 1
        if v == n:
            d -= 1
            if d >= 0:
                used &= ~(1 << tup[d])
            continue
        nxt[d] = v + 1
        row = rows[v]
        block = 0
        for j in range(d):
            block |= (row >> tup[j] & 1) << j
        code = prefix[d] | block << bases[d]
        if d == k - 1:
            tup[d] = v
            visit(tuple(tup), SubgraphCode(k, code))
            visits += 1
            continue
        tup[d] = v
        used |= 1 << v
        prefix[d + 1] = code
        d += 1
        nxt[d] = 0
    return visits
