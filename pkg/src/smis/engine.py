"""Smallest missing induced subgraph by exhaustive labeled counting.

For k = 2, 3, ... every ordered k-tuple of distinct vertices is encoded
and its counter incremented; the first k with a zero counter yields the
answer, the numerically smallest zero code being the witness.  Since all
orderings of every vertex subset are counted, one zero code means its
whole isomorphism class is absent, and the smallest zero code is also the
smallest canonical code over absent classes.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial, perm
from typing import Optional, Union

import numpy as np

from . import _kernels
from .codes import MAX_ORDER, SmisResult, SubgraphCode, decode, stream_codes, width
from .graph import Graph, GraphError

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 1 << 28
_KERNEL_MAX_WIDTH = 62


class ResourceLimitError(RuntimeError):
    """Search stopped at a configured order cap before finding an answer."""

    def __init__(self, message: str, k: int):
        super().__init__(message)
        self.k = k


class CounterBudgetError(ResourceLimitError):
    pass


@dataclass
class CounterTable:
    k: int
    mode: str
    counts: Union[np.ndarray, dict[int, int]]
    visits: int = 0

    def __getitem__(self, bits: int) -> int:
        if self.mode == "dense":
            return int(self.counts[bits])
        return self.counts.get(bits, 0)

    def total(self) -> int:
        if self.mode == "dense":
            return int(self.counts.sum())
        return sum(self.counts.values())

    def nonzero(self) -> list[tuple[int, int]]:
        """``(code, count)`` pairs with nonzero count, sorted by code."""
        if self.mode == "dense":
            idx = np.flatnonzero(self.counts)
            return list(zip(idx.tolist(), self.counts[idx].tolist()))
        return sorted(self.counts.items())

    def first_zero(self) -> Optional[int]:
        if self.mode == "dense":
            zeros = np.flatnonzero(self.counts == 0)
            return int(zeros[0]) if zeros.size else None
        # candidates in increasing order; present codes are skipped
        c = 0
        for code in sorted(self.counts):
            if code != c:
                break
            c += 1
        return c if c < 1 << width(self.k) else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, CounterTable):
            return NotImplemented
        return self.k == other.k and self.nonzero() == other.nonzero()


def default_workers() -> int:
    return int(os.environ.get("SMIS_WORKERS", "1"))


def _partitions(n: int, workers: int) -> list[np.ndarray]:
    workers = max(1, min(workers, n))
    return [np.arange(w, n, workers, dtype=np.int64) for w in range(workers)]


def count_labeled(
    g: Graph,
    k: int,
    *,
    workers: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    allow_sparse: bool = True,
) -> CounterTable:
    """Count, for every labeled code of order ``k``, the ordered tuples of
    distinct vertices of ``g`` that induce it.

    Tuple space is split by first vertex; each worker fills a private
    table and the tables are summed afterwards, so the result does not
    depend on the worker count.
    """
    if not 2 <= k <= MAX_ORDER:
        raise GraphError(f"subgraph order {k} outside [2, {MAX_ORDER}]")
    workers = default_workers() if workers is None else workers
    size = 1 << width(k)
    dense = size <= budget
    if not dense and not allow_sparse:
        raise CounterBudgetError(
            f"dense table for k={k} needs {size} counters, budget is {budget}", k)
    if g.n < k:
        return CounterTable(k, "dense" if dense else "sparse",
                            np.zeros(size, np.int64) if dense else {}, 0)
    if width(k) > _KERNEL_MAX_WIDTH:
        table: dict[int, int] = {}

        def bump(_tup, code):
            table[code.bits] = table.get(code.bits, 0) + 1

        visits = stream_codes(g, k, bump)
        return CounterTable(k, "sparse", table, visits)

    adj = np.ascontiguousarray(g.matrix)
    parts = _partitions(g.n, workers)
    if dense:
        job = lambda firsts: _kernels.count_dense(adj, k, firsts, size)  # noqa: E731
    else:
        job = lambda firsts: _kernels.count_sparse(adj, k, firsts)  # noqa: E731
    if len(parts) == 1:
        partials = [job(parts[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(parts)) as pool:
            partials = list(pool.map(job, parts))
    visits = sum(v for _, v in partials)
    if dense:
        counts = partials[0][0]
        for c, _ in partials[1:]:
            counts += c
        return CounterTable(k, "dense", counts, visits)
    merged: dict[int, int] = {}
    for c, _ in partials:
        for code, v in c.items():
            merged[code] = merged.get(code, 0) + v
    return CounterTable(k, "sparse", merged, visits)


def find_missing_at(g: Graph, k: int, **kwargs) -> Optional[SubgraphCode]:
    """Smallest labeled code of order ``k`` that no tuple of ``g`` induces."""
    bits = count_labeled(g, k, **kwargs).first_zero()
    return None if bits is None else SubgraphCode(k, bits)


def order_cap(n: int) -> int:
    """``floor(2 log2 n) + 2``; the search always succeeds by this order."""
    return (n * n).bit_length() - 1 + 2


def smis(
    g: Graph,
    *,
    workers: Optional[int] = None,
    max_k: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> SmisResult:
    if g.n == 0:
        code = SubgraphCode(1, 0)
        return SmisResult(1, decode(code), code)
    examined: dict[int, int] = {}
    for k in range(2, order_cap(g.n) + 1):
        if max_k is not None and k > max_k:
            raise ResourceLimitError(f"no missing subgraph of order <= {max_k}", k - 1)
        table = count_labeled(g, k, workers=workers, budget=budget)
        examined[k] = table.visits
        log.debug("k=%d: %d tuples, mode=%s", k, table.visits, table.mode)
        bits = table.first_zero()
        if bits is not None:
            code = SubgraphCode(k, bits)
            return SmisResult(k, decode(code), code, "engine", examined)
    raise AssertionError(f"no missing subgraph up to order {order_cap(g.n)} (n={g.n})")


def unlabeled_counts(g: Graph, k: int, **kwargs) -> dict[SubgraphCode, int]:
    """Number of ``k``-vertex subsets of ``g`` inducing each isomorphism
    class, keyed by canonical code."""
    from .oracle import canonical_code

    table = count_labeled(g, k, **kwargs)
    mass: dict[SubgraphCode, int] = {}
    for bits, count in table.nonzero():
        key = canonical_code(decode(SubgraphCode(k, bits)))
        mass[key] = mass.get(key, 0) + count
    kf = factorial(k)
    return {c: v // kf for c, v in sorted(mass.items())}


def falling(n: int, k: int) -> int:
    return perm(n, k) if n >= k else 0


def dump_counts(table: CounterTable) -> str:
    return "".join(f"{table.k} {code:x} {count}\n" for code, count in table.nonzero())
