"""Clique number from SMIS queries on g + X_i.

Adding X_i to g supplies every i-vertex graph except K_i, so K_i is
missing from the union exactly when g has no i-clique.

Each step costs an SMIS run on g + X_i, which grows quickly with i, so
the hosts here are kept to clique number at most 4.

Run:  python demos/03_clique_via_smis.py
"""
import numpy as np

from smis import clique_number_via_smis, max_clique
from smis.graph import random_graph

rng = np.random.default_rng(3)
shown = 0
while shown < 8:
    g = random_graph(int(rng.integers(4, 11)), float(rng.uniform(0.2, 0.6)), rng)
    if max_clique(g) > 4:
        continue
    shown += 1
    omega = clique_number_via_smis(g)
    print(f"n={g.n:2d} m={g.m:2d}  via smis: {omega}  branch and bound: {max_clique(g)}")
