"""Brute-force ground truth, kept independent of the counting engine.

Canonical forms are the minimum code over every vertex ordering, isomorphism
classes come from an exhaustive sweep over all labeled codes, containment is
plain backtracking.  Nothing here is fast; all of it is easy to audit.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Callable, Optional

import numpy as np

from .codes import SmisResult, SubgraphCode, decode, width
from .graph import Graph, GraphError, from_edge_list

CANON_MAX_ORDER = 10
ENUM_MAX_ORDER = 7
PLANAR_MAX_ORDER = 10
CLIQUE_MAX_VERTICES = 64
_CHUNK = 1 << 17


class Inconclusive(RuntimeError):
    """An oracle ran out of its enumeration range before deciding."""

    def __init__(self, message: str, kmax: int):
        super().__init__(message)
        self.kmax = kmax


# -- canonical codes ------------------------------------------------------

@lru_cache(maxsize=None)
def _perm_table(k: int) -> np.ndarray:
    return np.array(list(permutations(range(k))), dtype=np.int8).reshape(-1, k)


@lru_cache(maxsize=None)
def _pair_layout(k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Row index, column index and bit weight of every code position."""
    ii, jj = [], []
    for i in range(1, k):
        for j in range(i):
            ii.append(i)
            jj.append(j)
    weights = np.array([1 << b for b in range(width(k))], dtype=np.int64)
    return np.array(ii, dtype=np.intp), np.array(jj, dtype=np.intp), weights


def relabeled_codes(h: Graph) -> np.ndarray:
    """Codes of ``h`` under every one of its ``k!`` vertex orderings."""
    k = h.n
    if k > CANON_MAX_ORDER:
        raise GraphError(f"order {k} above canonicalization cap {CANON_MAX_ORDER}")
    if k < 2:
        return np.zeros(1, dtype=np.int64)
    ii, jj, weights = _pair_layout(k)
    a = h.matrix
    perms = _perm_table(k)
    out = np.empty(len(perms), dtype=np.int64)
    for s in range(0, len(perms), _CHUNK):
        p = perms[s:s + _CHUNK]
        out[s:s + _CHUNK] = a[p[:, ii], p[:, jj]].astype(np.int64) @ weights
    return out


def canonical_code(h: Graph) -> SubgraphCode:
    return SubgraphCode(h.n, int(relabeled_codes(h).min()))


def canonical_form(h: Graph) -> Graph:
    return decode(canonical_code(h))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return False
    return canonical_code(g) == canonical_code(h)


# -- enumeration ----------------------------------------------------------

@lru_cache(maxsize=None)
def _all_classes(k: int) -> tuple[int, ...]:
    """Canonical codes of all ``k``-vertex graphs, ascending.

    Sweeps every labeled code in increasing order; an unmarked code is the
    least member of a new orbit, whose members are then all marked.
    """
    if k < 2:
        return (0,)
    total = 1 << width(k)
    seen = np.zeros(total, dtype=bool)
    reps = []
    pos = 0
    while pos < total:
        reps.append(pos)
        seen[relabeled_codes(decode(SubgraphCode(k, pos)))] = True
        rest = np.flatnonzero(~seen[pos:])
        if rest.size == 0:
            break
        pos += int(rest[0])
    return tuple(reps)


def enumerate_nonisomorphic(k: int, keep: Optional[Callable[[Graph], bool]] = None) -> list[Graph]:
    """One canonical representative per isomorphism class of ``k``-vertex
    graphs satisfying ``keep``, sorted by code."""
    if not 0 <= k <= ENUM_MAX_ORDER:
        raise GraphError(f"order {k} above enumeration cap {ENUM_MAX_ORDER}")
    if k == 0:
        graphs = [Graph(0, ())]
    else:
        graphs = [decode(SubgraphCode(k, c)) for c in _all_classes(k)]
    if keep is None:
        return graphs
    return [h for h in graphs if keep(h)]


# -- containment ----------------------------------------------------------

def is_induced_subgraph(h: Graph, g: Graph) -> bool:
    """True iff some injective map of ``h`` into ``g`` preserves both edges
    and non-edges."""
    k = h.n
    if k > g.n:
        return False
    if k == 0:
        return True
    order = sorted(range(k), key=lambda v: (-h.degree(v), v))
    gdeg = [g.degree(v) for v in range(g.n)]
    by_degree = []
    for v in order:
        need = h.degree(v)
        by_degree.append(sum(1 << u for u in range(g.n) if gdeg[u] >= need))
    # for position i: which earlier positions are h-neighbours
    links = [[h.adj(order[i], order[j]) for j in range(i)] for i in range(k)]
    full = (1 << g.n) - 1
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = by_degree[i] & ~used
        for j, linked in enumerate(links[i]):
            row = g.rows[image[j]]
            cand &= row if linked else full & ~row
            if not cand:
                return False
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    return extend(0, 0)


# -- brute-force SMIS -----------------------------------------------------

def smis_oracle(g: Graph, kmax: int = ENUM_MAX_ORDER):
    """Test every isomorphism class of order 2, 3, ... for containment."""
    if g.n == 0:
        code = SubgraphCode(1, 0)
        return SmisResult(1, decode(code), code, "oracle")
    kmax = min(kmax, ENUM_MAX_ORDER)
    for k in range(2, kmax + 1):
        for h in enumerate_nonisomorphic(k):
            if not is_induced_subgraph(h, g):
                code = canonical_code(h)
                return SmisResult(k, h, code, "oracle")
    raise Inconclusive(f"every graph of order <= {kmax} is present", kmax)


# -- cliques --------------------------------------------------------------

def max_clique(g: Graph, *, max_n: Optional[int] = CLIQUE_MAX_VERTICES) -> int:
    """Clique number by branch and bound with a greedy-colouring bound."""
    if max_n is not None and g.n > max_n:
        raise GraphError(f"max_clique: n={g.n} above cap {max_n}")
    rows = g.rows
    best = 0

    def colour_bound(p: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour) in colour order
        out = []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                out.append((v, colour))
                uncoloured &= ~low
                avail &= ~low & ~rows[v]
        return out

    def expand(size: int, p: int) -> None:
        nonlocal best
        for v, colour in reversed(colour_bound(p)):
            if size + colour <= best:
                return
            nxt = p & rows[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    if g.n:
        expand(0, (1 << g.n) - 1)
    return best


# -- family predicates ----------------------------------------------------

def is_bipartite(h: Graph) -> bool:
    side = [-1] * h.n
    for s in range(h.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in h.neighbors(u):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def is_forest(h: Graph) -> bool:
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in h.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _reduce(adj: dict[int, set[int]]) -> dict[int, set[int]]:
    """Drop vertices of degree <= 1 and smooth degree-2 vertices; both
    preserve planarity in each direction."""
    adj = {v: set(ns) for v, ns in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            ns = adj[v]
            if len(ns) <= 1:
                for u in ns:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif len(ns) == 2:
                a, b = ns
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    return adj


def _key(adj: dict[int, set[int]]):
    verts = sorted(adj)
    index = {v: i for i, v in enumerate(verts)}
    g = from_edge_list(len(verts), ((index[u], index[v]) for u in verts for v in adj[u] if u < v))
    if g.n <= 7:
        return canonical_code(g)
    return (g.n, g.rows)


_planar_memo: dict = {}


def _planar(adj: dict[int, set[int]]) -> bool:
    adj = _reduce(adj)
    n = len(adj)
    m = sum(len(ns) for ns in adj.values()) // 2
    if n <= 4 or m < 9:
        return True
    if m > 3 * n - 6:
        return False
    key = _key(adj)
    if key in _planar_memo:
        return _planar_memo[key]
    # after reduction every degree is >= 3: 6 vertices and 9 edges is K3,3
    result = not (n == 6 and m == 9 and _two_colourable(adj))
    if result:
        edges = [(u, v) for u in adj for v in adj[u] if u < v]
        for u, v in edges:
            deleted = {w: set(ns) for w, ns in adj.items()}
            deleted[u].discard(v)
            deleted[v].discard(u)
            if not _planar(deleted):
                result = False
                break
            contracted = {w: set(ns) for w, ns in adj.items() if w != v}
            for w in adj[v]:
                if w != u:
                    contracted[w].discard(v)
                    contracted[w].add(u)
                    contracted[u].add(w)
            contracted[u].discard(v)
            if not _planar(contracted):
                result = False
                break
    _planar_memo[key] = result
    return result


def _two_colourable(adj: dict[int, set[int]]) -> bool:
    verts = sorted(adj)
    index = {v: i for i, v in enumerate(verts)}
    return is_bipartite(from_edge_list(len(verts), ((index[u], index[v]) for u in verts for v in adj[u] if u < v)))


def is_planar(h: Graph) -> bool:
    """Kuratowski–Wagner test: planar iff neither K5 nor K3,3 is a minor.

    Searches deletions and contractions exhaustively, so it is only meant
    for the small candidate graphs of the family search.
    """
    if h.n > PLANAR_MAX_ORDER:
        raise GraphError(f"is_planar: n={h.n} above cap {PLANAR_MAX_ORDER}")
    return _planar({v: set(h.neighbors(v)) for v in range(h.n)})


FAMILIES: dict[str, Optional[Callable[[Graph], bool]]] = {
    "all": None,
    "planar": is_planar,
    "bipartite": is_bipartite,
    "forest": is_forest,
}


def three_colourable(g: Graph) -> bool:
    """Exhaustive 3-colouring search (backtracking in vertex order)."""
    colour = [-1] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(3):
            if all(colour[u] != c for u in g.neighbors(v) if u < v):
                colour[v] = c
                if place(v + 1):
                    return True
        colour[v] = -1
        return False

    return place(0)


def count_subsets(g: Graph, k: int) -> dict[SubgraphCode, int]:
    """Induced copies per class by walking all ``C(n, k)`` vertex subsets."""
    from itertools import combinations
    from .graph import induced

    out: dict[SubgraphCode, int] = {}
    for subset in combinations(range(g.n), k):
        c = canonical_code(induced(g, subset))
        out[c] = out.get(c, 0) + 1
    return dict(sorted(out.items()))
