"""Smallest missing induced subgraph restricted to a graph family.

For k = 1, 2, ... every k-vertex member of the family is tested for
containment in the host; the first absentee (smallest canonical code)
is the answer.  The unrestricted family goes through the counting engine.
"""
from __future__ import annotations

from typing import Optional

from .codes import SmisResult
from .engine import smis
from .graph import Graph, GraphError
from .oracle import (ENUM_MAX_ORDER, FAMILIES, Inconclusive, canonical_code,
                     enumerate_nonisomorphic, is_induced_subgraph)

FAMILY_NAMES = tuple(FAMILIES)


def _predicate(family: str):
    try:
        return FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILY_NAMES)}") from None


def smallest_missing_in_family(
    g: Graph,
    family: str = "all",
    kmax: int = ENUM_MAX_ORDER,
    *,
    workers: Optional[int] = None,
) -> SmisResult:
    """Raises :class:`Inconclusive` if every member up to ``kmax`` occurs."""
    keep = _predicate(family)
    if family == "all":
        result = smis(g, workers=workers)
        if result.k > kmax:
            raise Inconclusive(f"every graph of order <= {kmax} is present", kmax)
        return result
    if kmax > ENUM_MAX_ORDER:
        raise GraphError(f"kmax={kmax} above enumeration cap {ENUM_MAX_ORDER}")
    for k in range(1, kmax + 1):
        for h in enumerate_nonisomorphic(k, keep):
            if not is_induced_subgraph(h, g):
                return SmisResult(k, h, canonical_code(h), f"family:{family}")
    raise Inconclusive(f"every {family} graph of order <= {kmax} is present", kmax)


def universality_index(g: Graph, family: str = "all", kmax: int = ENUM_MAX_ORDER, **kwargs) -> int:
    """Largest k such that ``g`` contains every k-vertex family member."""
    return smallest_missing_in_family(g, family, kmax, **kwargs).k - 1
