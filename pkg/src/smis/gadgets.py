"""All-but-clique gadgets X_i and the two clique reductions built on them.

X_2 is two isolated vertices labeled 1 and 2.  X_i adds 2^(i-1) vertices
labeled i, one per subset S of {1, ..., i-1} in binary-counter order; the
vertex for S is joined to every vertex whose label lies in S.  X_i has no
i-clique yet contains every other i-vertex graph as an induced subgraph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb
from typing import Optional

from .codes import clique_code, width
from .engine import smis
from .graph import Graph, GraphError, disjoint_union, from_edge_list, induced
from .oracle import max_clique

XI_MAX = 20
VERIFY_EMBED_MAX = 6
COLOURING_PART_MAX = 8


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[int, ...]


def build_xi(i: int) -> LabeledGraph:
    if not 2 <= i <= XI_MAX:
        raise GraphError(f"X_i needs 2 <= i <= {XI_MAX}, got {i}")
    labels = [1, 2]
    edges: list[tuple[int, int]] = []
    for level in range(3, i + 1):
        by_label = [[v for v, lab in enumerate(labels) if lab == lab_] for lab_ in range(1, level)]
        for subset in range(1 << (level - 1)):
            v = len(labels)
            for bit in range(level - 1):
                if subset >> bit & 1:
                    edges.extend((u, v) for u in by_label[bit])
            labels.append(level)
    return LabeledGraph(from_edge_list(len(labels), edges), tuple(labels))


@dataclass
class XiReport:
    i: int
    vertices: int
    independent_classes: bool
    no_edge_1_2: bool
    clique_number: int
    all_but_clique: Optional[bool]
    notes: list[str] = field(default_factory=list)

    @property
    def clique_ok(self) -> bool:
        return self.clique_number == self.i - 1

    @property
    def passed(self) -> bool:
        return (self.independent_classes and self.no_edge_1_2 and self.clique_ok
                and self.all_but_clique is True)


def verify_xi(x: LabeledGraph, i: int) -> XiReport:
    """Check the four gadget properties.

    The last one, that every labeled i-vertex graph without a 1-2 edge
    embeds label-preservingly, is decided by collecting the codes of all
    transversals (one vertex per label, ordered by label) and comparing
    against the full set; it is skipped above ``VERIFY_EMBED_MAX``.
    """
    g, labels = x.graph, x.labels
    classes: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        classes.setdefault(lab, []).append(v)
    independent = all(not (g.rows[v] & sum(1 << u for u in members))
                      for members in classes.values() for v in members)
    no_12 = not any(g.adj(u, v) for u in classes.get(1, []) for v in classes.get(2, []))
    omega = max_clique(g, max_n=None)
    report = XiReport(i, g.n, independent, no_12, omega, None)
    if i > VERIFY_EMBED_MAX:
        report.notes.append(f"embedding property skipped above i={VERIFY_EMBED_MAX}")
        return report
    if sorted(classes) != list(range(1, i + 1)):
        report.all_but_clique = False
        report.notes.append("labels are not exactly 1..i")
        return report
    bases = [comb(p, 2) for p in range(i)]
    realised = set()
    for pick in product(*(classes[lab] for lab in range(1, i + 1))):
        bits = 0
        for p in range(1, i):
            row = g.rows[pick[p]]
            for q in range(p):
                if row >> pick[q] & 1:
                    bits |= 1 << (bases[p] + q)
        realised.add(bits)
    # the 1-2 pair is bit 0; all codes with it clear must be realised
    wanted = {c for c in range(1 << width(i)) if not c & 1}
    missing = wanted - realised
    report.all_but_clique = not missing
    if missing:
        report.notes.append(f"{len(missing)} labeled graphs lack an embedding, e.g. code {min(missing):x}")
    return report


def clique_number_via_smis(g: Graph, *, workers: Optional[int] = None, max_i: int = XI_MAX) -> int:
    """omega(g) as one less than the first i where smis(g + X_i) is K_i."""
    if g.n < 1:
        raise GraphError("clique_number_via_smis needs at least one vertex")
    for i in range(2, max_i + 1):
        result = smis(disjoint_union(g, build_xi(i).graph), workers=workers)
        if result.k < i:
            raise AssertionError(f"g + X_{i} misses an order-{result.k} graph")
        if result.code == clique_code(i):
            return i - 1
    raise RuntimeError(f"clique number not found up to X_{max_i}")


@dataclass(frozen=True)
class ColouringReduction:
    graph: Graph
    parts: tuple[tuple[int, ...], ...]
    # vertex of the reduction graph -> (part index, colours of that part)
    vertices: tuple[tuple[int, tuple[int, ...]], ...]


def _split(n: int, t: int) -> list[tuple[int, ...]]:
    size, extra = divmod(n, t)
    parts, start = [], 0
    for p in range(t):
        end = start + size + (p < extra)
        parts.append(tuple(range(start, end)))
        start = end
    return parts


def reduce_3col_to_clique(g: Graph, t: int) -> ColouringReduction:
    """Graph whose t-cliques are exactly the proper 3-colourings of ``g``.

    ``g`` is cut into ``t`` contiguous blocks of near-equal size.  Each
    proper 3-colouring of a block is a vertex; colourings of different
    blocks are adjacent when no edge between the blocks is monochromatic.
    """
    if not 1 <= t <= g.n:
        raise GraphError(f"part count t={t} outside [1, {g.n}]")
    parts = _split(g.n, t)
    if max(map(len, parts)) > COLOURING_PART_MAX:
        raise GraphError(f"part size above {COLOURING_PART_MAX}")
    verts: list[tuple[int, tuple[int, ...]]] = []
    for p, part in enumerate(parts):
        local = induced(g, part)
        for colours in product(range(3), repeat=len(part)):
            if all(colours[a] != colours[b] for a, b in local.edges()):
                verts.append((p, colours))
    part_of = {v: p for p, part in enumerate(parts) for v in part}
    between: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in g.edges():
        if part_of[u] != part_of[v]:
            if part_of[u] > part_of[v]:
                u, v = v, u
            between.setdefault((part_of[u], part_of[v]), []).append((u, v))
    colour = [dict(zip(parts[p], cs)) for p, cs in verts]
    edges = []
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            pa, pb = verts[a][0], verts[b][0]
            if pa == pb:
                continue
            ca, cb = colour[a], colour[b]
            if all(ca[u] != cb[v] for u, v in between.get((pa, pb), ())):
                edges.append((a, b))
    return ColouringReduction(from_edge_list(len(verts), edges), tuple(parts), tuple(verts))
