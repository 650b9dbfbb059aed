"""Compiled inner loops for labeled subgraph counting.

Both kernels walk ordered tuples of distinct vertices depth-first in
lexicographic order, restricted to the given first vertices.  Besides the
prefix-code stack they keep, per depth ``d``, the column masks
``mask[d][w] = sum_{j<d} adj[tup[j], w] << j``; the last tuple position is
then a single OR and shift per tuple.
"""
from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.typed import Dict


@njit(cache=True, nogil=True)
def _walk_dense(adj, k, firsts, counts):
    n = adj.shape[0]
    base = np.empty(k, np.int64)
    for i in range(k):
        base[i] = i * (i - 1) // 2
    tup = np.zeros(k, np.int64)
    prefix = np.zeros(k + 1, np.int64)
    nxt = np.zeros(k, np.int64)
    masks = np.zeros((k, n), np.int64)
    used = np.zeros(n, np.bool_)
    visits = 0
    for f in firsts:
        tup[0] = f
        used[f] = True
        for w in range(n):
            masks[1, w] = adj[f, w]
        prefix[1] = 0
        d = 1
        nxt[1] = 0
        while d >= 1:
            if d == k - 1:
                pre = prefix[d]
                sh = base[d]
                row = masks[d]
                for w in range(n):
                    if not used[w]:
                        counts[pre | (row[w] << sh)] += 1
                        visits += 1
                d -= 1
                if d >= 1:
                    used[tup[d]] = False
                continue
            v = nxt[d]
            while v < n and used[v]:
                v += 1
            if v == n:
                d -= 1
                if d >= 1:
                    used[tup[d]] = False
                continue
            nxt[d] = v + 1
            tup[d] = v
            used[v] = True
            prefix[d + 1] = prefix[d] | (masks[d, v] << base[d])
            for w in range(n):
                masks[d + 1, w] = masks[d, w] | (np.int64(adj[v, w]) << d)
            d += 1
            nxt[d] = 0
        used[f] = False
    return visits


@njit(cache=True, nogil=True)
def _walk_sparse(adj, k, firsts, table):
    n = adj.shape[0]
    base = np.empty(k, np.int64)
    for i in range(k):
        base[i] = i * (i - 1) // 2
    tup = np.zeros(k, np.int64)
    prefix = np.zeros(k + 1, np.int64)
    nxt = np.zeros(k, np.int64)
    masks = np.zeros((k, n), np.int64)
    used = np.zeros(n, np.bool_)
    visits = 0
    for f in firsts:
        tup[0] = f
        used[f] = True
        for w in range(n):
            masks[1, w] = adj[f, w]
        prefix[1] = 0
        d = 1
        nxt[1] = 0
        while d >= 1:
            if d == k - 1:
                pre = prefix[d]
                sh = base[d]
                for w in range(n):
                    if not used[w]:
                        c = pre | (masks[d, w] << sh)
                        table[c] = table.get(c, 0) + 1
                        visits += 1
                d -= 1
                if d >= 1:
                    used[tup[d]] = False
                continue
            v = nxt[d]
            while v < n and used[v]:
                v += 1
            if v == n:
                d -= 1
                if d >= 1:
                    used[tup[d]] = False
                continue
            nxt[d] = v + 1
            tup[d] = v
            used[v] = True
            prefix[d + 1] = prefix[d] | (masks[d, v] << base[d])
            for w in range(n):
                masks[d + 1, w] = masks[d, w] | (np.int64(adj[v, w]) << d)
            d += 1
            nxt[d] = 0
        used[f] = False
    return visits


def new_sparse_table():
    return Dict.empty(key_type=types.int64, value_type=types.int64)


def count_dense(adj: np.ndarray, k: int, firsts: np.ndarray, size: int) -> tuple[np.ndarray, int]:
    counts = np.zeros(size, dtype=np.int64)
    visits = _walk_dense(adj, k, firsts, counts)
    return counts, int(visits)


def count_sparse(adj: np.ndarray, k: int, firsts: np.ndarray) -> tuple[dict[int, int], int]:
    table = new_sparse_table()
    visits = _walk_sparse(adj, k, firsts, table)
    return {int(c): int(v) for c, v in table.items()}, int(visits)
