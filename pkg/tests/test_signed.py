import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hoffman.graph import Graph, complete_graph, cycle_graph, path_graph
from hoffman.iso import automorphisms
from hoffman.signed import (EdgeSignedGraph, all_matchings, enumerate_minus_matchings, is_matching,
                            signed_adjacency, switch_at, switching_equivalent, switching_set)
from hoffman.smith import smith_graph
from strategies import graphs, trees


@st.composite
def signed_graphs(draw, base=graphs(max_n=7)):
    g = draw(base)
    minus = [e for e in g.edges if draw(st.booleans())]
    return EdgeSignedGraph.from_graph(g, minus)


def brute_switching_equivalent(s1, s2) -> bool:
    # oracle: all 2^n switchings times all vertex permutations
    n = s1.n
    for perm in itertools.permutations(range(n)):
        plus = {tuple(sorted((perm[u], perm[v]))) for u, v in s1.plus}
        minus = {tuple(sorted((perm[u], perm[v]))) for u, v in s1.minus}
        image = EdgeSignedGraph(n, frozenset(plus), frozenset(minus))
        for k in range(n + 1):
            for u in itertools.combinations(range(n), k):
                if switch_at(image, u) == s2:
                    return True
    return False


def test_signed_adjacency_examples():
    e = Graph(2, ((0, 1),))
    assert signed_adjacency(EdgeSignedGraph.from_graph(e)).tolist() == [[0, 1], [1, 0]]
    assert signed_adjacency(EdgeSignedGraph.from_graph(e, [(0, 1)])).tolist() == [[0, -1], [-1, 0]]
    p3 = EdgeSignedGraph.from_graph(path_graph(3), [(1, 2)])
    assert signed_adjacency(p3).tolist() == [[0, 1, 0], [1, 0, -1], [0, -1, 0]]


def test_both_signs_rejected():
    with pytest.raises(ValueError):
        EdgeSignedGraph(2, frozenset({(0, 1)}), frozenset({(0, 1)}))
    with pytest.raises(ValueError):
        EdgeSignedGraph.from_graph(path_graph(3), [(0, 2)])


def test_switch_examples():
    s = EdgeSignedGraph.from_graph(path_graph(3), [(1, 2)])
    assert switch_at(s, ()) == s
    e = EdgeSignedGraph.from_graph(Graph(2, ((0, 1),)), [(0, 1)])
    assert switch_at(e, [0]) == EdgeSignedGraph.from_graph(Graph(2, ((0, 1),)))
    allplus = EdgeSignedGraph.from_graph(path_graph(3))
    assert switch_at(allplus, [1]).minus == {(0, 1), (1, 2)}
    with pytest.raises(ValueError):
        switch_at(allplus, [5])


def test_switching_equivalence_examples():
    p3 = path_graph(3)
    assert switching_equivalent(EdgeSignedGraph.from_graph(p3, [(1, 2)]),
                                EdgeSignedGraph.from_graph(p3, p3.edges))
    tri = complete_graph(3)
    plus, minus = EdgeSignedGraph.from_graph(tri), EdgeSignedGraph.from_graph(tri, tri.edges)
    assert not switching_equivalent(plus, minus)
    assert not brute_switching_equivalent(plus, minus)


@given(signed_graphs(base=trees(max_n=9)))
def test_trees_have_one_switching_class(s):
    assert switching_equivalent(s, EdgeSignedGraph.from_graph(s.underlying))
    assert switching_set(s, EdgeSignedGraph.from_graph(s.underlying)) is not None


@given(signed_graphs(), st.data())
def test_switch_preserves_spectrum(s, data):
    u = data.draw(st.sets(st.integers(0, s.n - 1)))
    a = np.linalg.eigvalsh(signed_adjacency(s))
    b = np.linalg.eigvalsh(signed_adjacency(switch_at(s, u)))
    assert np.allclose(a, b)


@given(signed_graphs(), st.data())
def test_switching_set_recovers_switch(s, data):
    u = data.draw(st.sets(st.integers(0, s.n - 1)))
    t = switch_at(s, u)
    found = switching_set(s, t)
    assert found is not None and switch_at(s, found) == t


@given(signed_graphs(base=graphs(max_n=5)), signed_graphs(base=graphs(max_n=5)))
def test_switching_equivalent_matches_brute_force(s1, s2):
    if s1.n != s2.n:
        assert not switching_equivalent(s1, s2)
        return
    assert switching_equivalent(s1, s2) == brute_switching_equivalent(s1, s2)


def test_cycle_sign_product_is_invariant():
    c = cycle_graph(5)
    one = EdgeSignedGraph.from_graph(c, [(0, 1)])
    two = EdgeSignedGraph.from_graph(c, [(0, 1), (2, 3)])
    assert not switching_equivalent(one, two)
    assert switching_equivalent(two, EdgeSignedGraph.from_graph(c))


def test_json_and_dot():
    s = EdgeSignedGraph.from_graph(path_graph(3), [(0, 1)])
    assert EdgeSignedGraph.from_json(s.to_json()) == s
    dot = s.to_dot()
    assert "style=dashed" in dot and "style=solid" in dot


# --- matchings up to automorphism ---------------------------------------------------------

def brute_matching_classes(g: Graph) -> int:
    group = automorphisms([set(a) for a in g.adj])
    seen, classes = set(), 0
    for m in all_matchings(g):
        key = tuple(sorted(m))
        if key in seen:
            continue
        classes += 1
        for p in group:
            seen.add(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in m)))
    return classes


def test_minus_matching_examples():
    assert [c.representative for c in enumerate_minus_matchings(path_graph(2))] == [(), ((0, 1),)]
    assert len(enumerate_minus_matchings(path_graph(3))) == 2
    assert len(enumerate_minus_matchings(smith_graph("E6~"))) == 7


@pytest.mark.parametrize("kind,count", [("E6~", 7), ("E7~", 18), ("E8~", 50)])
def test_minus_matching_counts(kind, count):
    g = smith_graph(kind)
    classes = enumerate_minus_matchings(g)
    assert len(classes) == count == brute_matching_classes(g)
    assert sum(c.orbit_size for c in classes) == len(all_matchings(g))
    assert all(is_matching(c.representative) for c in classes)


def test_minus_matchings_need_a_tree():
    with pytest.raises(ValueError):
        enumerate_minus_matchings(cycle_graph(4))


@given(trees(max_n=8))
def test_matching_orbits_partition(t):
    classes = enumerate_minus_matchings(t)
    assert sum(c.orbit_size for c in classes) == len(all_matchings(t))
    assert len(classes) == brute_matching_classes(t)
