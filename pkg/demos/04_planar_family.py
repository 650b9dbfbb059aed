"""Restricting the search to planar graphs.

A planar host can never contain K5, so the plain question is less
interesting there; asking for the smallest missing planar graph is.

Run:  python demos/04_planar_family.py
"""
import numpy as np
from scipy.spatial import Delaunay

from smis import emit_graph6, smallest_missing_in_family, universality_index
from smis.graph import from_edge_list, grid_graph


def triangulation(n, rng):
    tri = Delaunay(rng.random((n, 2)))
    edges = {tuple(sorted((int(s[a]), int(s[b])))) for s in tri.simplices for a, b in ((0, 1), (1, 2), (0, 2))}
    return from_edge_list(n, sorted(edges))


rng = np.random.default_rng(11)
hosts = {"grid 5x5": grid_graph(5, 5)}
hosts.update({f"triangulation n={n}": triangulation(n, rng) for n in (10, 20, 40)})
for name, g in hosts.items():
    r = smallest_missing_in_family(g, "planar")
    print(f"{name:22s} k={r.k} missing={emit_graph6(r.missing).decode()}"
          f"  universality={universality_index(g, 'planar')}")
