"""Smallest missing induced subgraphs of a few familiar graphs.

Run:  python demos/01_find_smis.py
"""
from smis import emit_graph6, smis
from smis.graph import complete_graph, cycle_graph, hypercube_graph, path_graph, petersen_graph

hosts = {
    "K5": complete_graph(5),
    "P10": path_graph(10),
    "C5": cycle_graph(5),
    "Petersen": petersen_graph(),
    "Q4": hypercube_graph(4),
}

for name, g in hosts.items():
    r = smis(g)
    # the witness is the smallest code at the first order with a zero counter
    print(f"{name:9s} n={g.n:2d}  k={r.k}  missing={emit_graph6(r.missing).decode():4s}  code={r.code.hex}")

# Every order below k is fully present, so k-1 measures how universal the host is.
r = smis(petersen_graph())
print("Petersen tuples examined per order:", r.counts_examined)
