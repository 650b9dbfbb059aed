import numpy as np
import pytest

from smis.codes import clique_code
from smis.engine import smis
from smis.gadgets import (LabeledGraph, build_xi, clique_number_via_smis, reduce_3col_to_clique,
                          verify_xi)
from smis.graph import (GraphError, complete_graph, cycle_graph, disjoint_union,
                        empty_graph, from_edge_list, induced, path_graph, petersen_graph,
                        random_graph)
from smis.oracle import max_clique, three_colourable


def test_build_xi_small_cases():
    x2 = build_xi(2)
    assert (x2.graph.n, x2.graph.m, x2.labels) == (2, 0, (1, 2))
    x3 = build_xi(3)
    assert (x3.graph.n, x3.graph.m) == (6, 4)
    assert x3.labels == (1, 2, 3, 3, 3, 3)
    # subset vertices {}, {1}, {2}, {1,2} in binary-counter order
    assert [x3.graph.rows[v] & 0b11 for v in range(2, 6)] == [0b00, 0b01, 0b10, 0b11]
    x4 = build_xi(4)
    assert x4.graph.n == 14 and max_clique(x4.graph) == 3
    assert smis(x4.graph).missing == complete_graph(4)


@pytest.mark.parametrize("i", range(2, 9))
def test_build_xi_shape(i):
    x = build_xi(i)
    assert x.graph.n == 2 ** i - 2
    counts = {lab: x.labels.count(lab) for lab in set(x.labels)}
    assert counts == {1: 1, 2: 1, **{j: 2 ** (j - 1) for j in range(3, i + 1)}}


@pytest.mark.parametrize("i", range(3, 8))
def test_build_xi_is_incremental(i):
    prev, cur = build_xi(i - 1), build_xi(i)
    assert induced(cur.graph, range(prev.graph.n)) == prev.graph
    assert cur.labels[: prev.graph.n] == prev.labels


def test_build_xi_range():
    for bad in (1, 21):
        with pytest.raises(GraphError):
            build_xi(bad)


@pytest.mark.parametrize("i", [2, 3, 4, 5])
def test_verify_xi_passes(i):
    report = verify_xi(build_xi(i), i)
    assert report.passed, report
    assert report.vertices == 2 ** i - 2


def test_verify_xi_detects_injected_edge():
    x = build_xi(4)
    bad = LabeledGraph(from_edge_list(x.graph.n, x.graph.edges() + [(0, 1)]), x.labels)
    report = verify_xi(bad, 4)
    assert not report.no_edge_1_2
    assert not report.passed


def test_verify_xi_detects_missing_subset_vertex():
    x = build_xi(4)
    keep = [v for v in range(x.graph.n) if v != 13]  # the vertex for {1, 2, 3}
    g = induced(x.graph, keep)
    report = verify_xi(LabeledGraph(g, tuple(x.labels[v] for v in keep)), 4)
    assert report.independent_classes and report.no_edge_1_2
    assert report.all_but_clique is False


def test_verify_xi_skips_embedding_above_cap():
    report = verify_xi(build_xi(7), 7)
    assert report.all_but_clique is None and report.clique_ok


@pytest.mark.parametrize("g, omega", [
    (empty_graph(2), 1), (empty_graph(5), 1), (complete_graph(3), 3), (cycle_graph(5), 2),
    (petersen_graph(), 2), (path_graph(1), 1), (complete_graph(4), 4),
])
def test_clique_number_via_smis_examples(g, omega):
    assert clique_number_via_smis(g) == omega == max_clique(g)


def test_clique_reduction_trace_for_triangle():
    k3 = complete_graph(3)
    for i in (2, 3):
        r = smis(disjoint_union(k3, build_xi(i).graph))
        assert r.k > i
    r = smis(disjoint_union(k3, build_xi(4).graph))
    assert (r.k, r.code) == (4, clique_code(4))


def test_reduce_3col_examples():
    red = reduce_3col_to_clique(complete_graph(3), 3)
    assert red.graph.n == 9 and max_clique(red.graph) == 3
    red = reduce_3col_to_clique(complete_graph(4), 2)
    assert red.graph.n == 12 and max_clique(red.graph) < 2
    red = reduce_3col_to_clique(cycle_graph(4), 2)
    assert max_clique(red.graph) >= 2


def test_reduce_3col_parts_and_metadata():
    g = path_graph(5)
    red = reduce_3col_to_clique(g, 3)
    assert red.parts == ((0, 1), (2, 3), (4,))
    for p, colours in red.vertices:
        part = red.parts[p]
        assert all(colours[a] != colours[b] for a, b in induced(g, part).edges())
    # no edges inside a part
    for a, b in red.graph.edges():
        assert red.vertices[a][0] != red.vertices[b][0]


def test_reduce_3col_limits():
    with pytest.raises(GraphError):
        reduce_3col_to_clique(path_graph(3), 4)
    with pytest.raises(GraphError):
        reduce_3col_to_clique(path_graph(9), 1)


def test_reduce_3col_matches_colouring_search():
    rng = np.random.default_rng(21)
    for _ in range(15):
        g = random_graph(int(rng.integers(1, 7)), float(rng.uniform(0.3, 0.8)), rng)
        for t in range(1, g.n + 1):
            red = reduce_3col_to_clique(g, t)
            assert (max_clique(red.graph, max_n=None) >= t) == three_colourable(g)
