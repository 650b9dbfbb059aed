"""3-colourability as a clique question.

Split the vertices into t parts, list each part's proper 3-colourings and
join compatible colourings of different parts.  A t-clique picks one
colouring per part that agrees on every crossing edge.

Run:  python demos/05_colouring_reduction.py
"""
from smis import max_clique, reduce_3col_to_clique
from smis.graph import complete_graph, cycle_graph, from_edge_list, petersen_graph

wheel5 = from_edge_list(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)])
cases = {"C5": cycle_graph(5), "K4": complete_graph(4), "Petersen": petersen_graph(), "W5": wheel5}

for name, g in cases.items():
    t = 3 if g.n <= 6 else 4
    red = reduce_3col_to_clique(g, t)
    found = max_clique(red.graph, max_n=None) >= t
    print(f"{name:9s} t={t}  H: n={red.graph.n:3d} m={red.graph.m:4d}  "
          f"t-clique={'yes' if found else 'no'}")
