from itertools import combinations, permutations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corpus import graphs
from smis.codes import SubgraphCode, decode, encode
from smis.graph import (Graph, GraphError, complete_bipartite, complete_graph, cycle_graph,
                        empty_graph, from_edge_list, induced, path_graph, petersen_graph,
                        random_graph)
from smis.gadgets import build_xi
from smis.oracle import (Inconclusive, canonical_code, enumerate_nonisomorphic, is_bipartite,
                         is_forest, is_induced_subgraph, is_planar, max_clique, smis_oracle,
                         three_colourable)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def relabel(g: Graph, p) -> Graph:
    # vertex v of g becomes p[v]
    return from_edge_list(g.n, [(p[u], p[v]) for u, v in g.edges()])


def test_canonical_examples():
    p3 = path_graph(3)
    codes = {canonical_code(relabel(p3, p)) for p in permutations(range(3))}
    assert codes == {SubgraphCode(3, 3)}
    assert min(encode(relabel(p3, p)).bits for p in permutations(range(3))) == 3
    assert canonical_code(complete_graph(3)).bits == 7


def test_four_vertex_classes_exhaustive():
    classes = {canonical_code(decode(SubgraphCode(4, b))) for b in range(64)}
    assert len(classes) == 11
    for c in classes:
        assert canonical_code(decode(c)) == c


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=7, min_n=1), st.data())
def test_canonical_code_invariant_under_relabeling(g, data):
    p = data.draw(st.permutations(range(g.n)))
    assert canonical_code(relabel(g, p)) == canonical_code(g)


def test_canonical_code_separates_classes():
    rng = np.random.default_rng(4)
    for _ in range(100):
        g = random_graph(6, 0.5, rng)
        h = random_graph(6, 0.5, rng)
        same = nx.is_isomorphic(to_nx(g), to_nx(h))
        assert same == (canonical_code(g) == canonical_code(h))


def test_canonical_cap():
    with pytest.raises(GraphError):
        canonical_code(empty_graph(11))


def test_is_induced_subgraph_examples():
    assert is_induced_subgraph(complete_graph(3), complete_graph(4))
    assert not is_induced_subgraph(path_graph(3), complete_graph(3))
    assert not is_induced_subgraph(cycle_graph(4), complete_graph(4))
    assert is_induced_subgraph(empty_graph(0), empty_graph(0))
    assert not is_induced_subgraph(empty_graph(3), empty_graph(2))


def subset_contains(h: Graph, g: Graph) -> bool:
    target = canonical_code(h)
    return any(canonical_code(induced(g, s)) == target for s in combinations(range(g.n), h.n))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10), graphs(max_n=5))
def test_containment_agrees_with_subset_enumeration(g, h):
    assert is_induced_subgraph(h, g) == subset_contains(h, g)


@pytest.mark.parametrize("k, count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_enumeration_counts(k, count):
    reps = enumerate_nonisomorphic(k)
    assert len(reps) == count
    codes = [encode(h) for h in reps]
    assert codes == sorted(codes)
    assert all(canonical_code(h) == c for h, c in zip(reps, codes))


def test_enumeration_filters_and_cap():
    assert len(enumerate_nonisomorphic(5, is_planar)) == 33
    with pytest.raises(GraphError):
        enumerate_nonisomorphic(8)


def test_planarity_examples():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert not is_planar(petersen_graph())
    with pytest.raises(GraphError):
        is_planar(empty_graph(11))


@pytest.mark.parametrize("k", [5, 6, 7])
def test_planarity_agrees_with_networkx(k):
    for h in enumerate_nonisomorphic(k):
        assert is_planar(h) == nx.check_planarity(to_nx(h))[0], encode(h)


def test_planarity_random_order_8():
    rng = np.random.default_rng(8)
    for _ in range(60):
        g = random_graph(8, float(rng.uniform(0.2, 0.6)), rng)
        assert is_planar(g) == nx.check_planarity(to_nx(g))[0]


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8, min_n=1), st.data())
def test_planarity_is_edge_monotone(g, data):
    if not is_planar(g) or not g.m:
        return
    drop = data.draw(st.sampled_from(g.edges()))
    assert is_planar(from_edge_list(g.n, [e for e in g.edges() if e != drop]))


def test_bipartite_and_forest_examples():
    assert is_bipartite(cycle_graph(6)) and not is_bipartite(cycle_graph(5))
    assert is_forest(path_graph(7)) and not is_forest(cycle_graph(4))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_family_predicates_agree_with_networkx(g):
    h = to_nx(g)
    assert is_bipartite(g) == nx.is_bipartite(h)
    assert is_forest(g) == (g.n == 0 or nx.is_forest(h))


def test_max_clique_examples():
    for n in range(1, 9):
        assert max_clique(complete_graph(n)) == n
    assert max_clique(cycle_graph(5)) == 2
    assert max_clique(build_xi(4).graph) == 3
    assert max_clique(empty_graph(0)) == 0
    with pytest.raises(GraphError):
        max_clique(empty_graph(65))


def test_max_clique_against_networkx():
    rng = np.random.default_rng(12)
    for _ in range(60):
        g = random_graph(int(rng.integers(1, 40)), float(rng.random()), rng)
        expected = max(len(c) for c in nx.find_cliques(to_nx(g)))
        assert max_clique(g) == expected


def test_smis_oracle_examples():
    r = smis_oracle(complete_graph(5))
    assert (r.k, r.missing, r.method) == (2, empty_graph(2), "oracle")
    r = smis_oracle(path_graph(4))
    assert (r.k, r.missing) == (3, empty_graph(3))
    r = smis_oracle(build_xi(4).graph)
    assert (r.k, r.missing) == (4, complete_graph(4))
    with pytest.raises(Inconclusive) as info:
        smis_oracle(build_xi(4).graph, kmax=3)
    assert info.value.kmax == 3


def test_three_colourable():
    assert three_colourable(cycle_graph(5))
    assert not three_colourable(complete_graph(4))
    assert three_colourable(petersen_graph())
    assert three_colourable(empty_graph(0))
