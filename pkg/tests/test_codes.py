from collections import Counter
from itertools import permutations
from math import perm

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corpus import graphs
from smis.codes import SubgraphCode, decode, encode, encode_tuple, pair_bit, stream_codes
from smis.graph import (GraphError, complete_graph, empty_graph, induced, path_graph,
                        random_graph)


def collect(g, k):
    seen = []
    visits = stream_codes(g, k, lambda tup, code: seen.append((tup, code)))
    assert visits == len(seen)
    return seen


def test_bit_positions():
    assert [pair_bit(1, 0), pair_bit(2, 0), pair_bit(2, 1), pair_bit(3, 0)] == [0, 1, 2, 3]
    assert pair_bit(0, 2) == pair_bit(2, 0)


def test_encode_tuple_examples():
    p3 = path_graph(3)
    assert encode_tuple(complete_graph(3), (0, 1, 2)) == SubgraphCode(3, 0b111)
    assert encode_tuple(p3, (0, 1, 2)).bits == 0b101
    assert encode_tuple(p3, (0, 2, 1)).bits == 0b110


def test_encode_tuple_errors():
    with pytest.raises(GraphError):
        encode_tuple(path_graph(3), (0, 0))
    with pytest.raises(GraphError):
        encode_tuple(path_graph(3), (0,))


def test_decode_examples():
    assert decode(SubgraphCode(3, 7)) == complete_graph(3)
    assert decode(SubgraphCode(3, 0)) == empty_graph(3)
    assert decode(SubgraphCode(4, 0b111111)) == complete_graph(4)


def test_code_range_checked():
    with pytest.raises(ValueError):
        SubgraphCode(3, 8)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_decode_encode_exhaustive(k):
    for bits in range(1 << (k * (k - 1) // 2)):
        c = SubgraphCode(k, bits)
        g = decode(c)
        assert encode(g) == c
        assert encode_tuple(g, tuple(range(k))) == c


def test_stream_examples():
    seen = collect(complete_graph(3), 2)
    assert len(seen) == 6 and all(c.bits == 1 for _, c in seen)
    seen = collect(empty_graph(2), 2)
    assert [c.bits for _, c in seen] == [0, 0]
    assert collect(path_graph(2), 3) == []


def test_stream_p3_multiset_matches_brute_force():
    p3 = path_graph(3)
    expected = Counter(encode_tuple(p3, t).bits for t in permutations(range(3)))
    assert expected == Counter({5: 2, 6: 2, 3: 2})
    assert Counter(c.bits for _, c in collect(p3, 3)) == expected


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.integers(2, 4))
def test_stream_visits_every_distinct_tuple_once_in_order(g, k):
    seen = collect(g, k)
    tuples = [t for t, _ in seen]
    assert all(len(set(t)) == k for t in tuples)
    assert tuples == sorted(tuples)
    assert tuples == list(permutations(range(g.n), k))
    assert len(tuples) == (perm(g.n, k) if g.n >= k else 0)


def test_stream_codes_match_fresh_encoding():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 1000:
        g = random_graph(int(rng.integers(4, 9)), float(rng.random()), rng)
        k = int(rng.integers(2, min(g.n, 5) + 1))
        for tup, code in collect(g, k):
            if rng.random() < 0.2:
                assert code == encode_tuple(g, tup)
                assert decode(code) == induced(g, tup)
                checked += 1
