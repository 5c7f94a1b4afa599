import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hoffman.catalog import make_c, make_fat_star, make_h_t
from hoffman.hoffman import (HoffmanError, HoffmanGraph, attach_fat, check_tree_like_stripping, decompose,
                             direct_sum, generated_subgraph, hoffman_isomorphic, is_indecomposable,
                             is_induced_hoffman_subgraph, is_saturated, iter_saturations_preserving_ir,
                             lambda_min_cmp3, multiplicity_of, saturate_preserving_ir, slim_graph,
                             special_graph, special_matrix, special_minus_graph, stripped_sum)
from hoffman.linalg import LambdaOrder
from strategies import hoffman_graphs, tree_like

EQ, GT, LT = LambdaOrder.EQUAL, LambdaOrder.GREATER, LambdaOrder.LESS


def h3(slim, fats):
    return HoffmanGraph.build([slim], fats, [(slim, f) for f in fats])


def to_nx(h: HoffmanGraph) -> nx.Graph:
    g = nx.Graph()
    for v in h.slim:
        g.add_node(v, kind="s")
    for f in h.fat:
        g.add_node(f, kind="f")
    g.add_edges_from(tuple(e) for e in h.edges)
    return g


# --- construction ------------------------------------------------------------------------

def test_validation():
    with pytest.raises(HoffmanError):
        HoffmanGraph.build([0], [1, 2], [(0, 1), (1, 2)])  # adjacent fats
    with pytest.raises(HoffmanError):
        HoffmanGraph.build([0], [1], [])  # fat without a slim neighbour
    with pytest.raises(HoffmanError):
        HoffmanGraph.build([0], [0], [])
    with pytest.raises(HoffmanError):
        HoffmanGraph.build([0], [], [(0, 3)])


def test_json_round_trip():
    c = make_c(5)
    assert HoffmanGraph.from_json(c.to_json()) == c
    with pytest.raises(HoffmanError):
        h3("x", ["a"]).to_dict()


# --- special matrix --------------------------------------------------------------------------

def test_special_matrix_examples():
    assert special_matrix(make_h_t(3)).tolist() == [[-3]]
    assert special_matrix(make_fat_star(3)).tolist() == [[-1] * 3] * 3
    assert special_matrix(make_c(2)).tolist() == [[-2, -1], [-1, -2]]


def test_lambda_examples():
    assert lambda_min_cmp3(make_h_t(3)) is EQ
    assert lambda_min_cmp3(make_h_t(1)) is GT
    for m in (2, 3, 7, 15):
        assert lambda_min_cmp3(make_c(m)) is EQ
    assert lambda_min_cmp3(make_h_t(4)) is LT


@given(hoffman_graphs())
def test_special_matrix_definition(h):
    # oracle: A_s - C C^T from dense incidence matrices
    k = len(h.slim)
    a = np.array([[int(frozenset((x, y)) in h.edges) for y in h.slim] for x in h.slim])
    c = np.array([[int(frozenset((x, f)) in h.edges) for f in h.fat] for x in h.slim]).reshape(k, len(h.fat))
    assert np.array_equal(special_matrix(h), a - c @ c.T)


@given(hoffman_graphs())
def test_special_graph_signs(h):
    sp = special_matrix(h)
    sg = special_graph(h)
    for i in range(len(h.slim)):
        for j in range(i + 1, len(h.slim)):
            assert sg.sign(i, j) == int(np.sign(sp[i, j]))
    assert set(special_minus_graph(h).edges) == set(sg.minus)


def test_slim_graph_examples():
    assert slim_graph(make_c(2)).edges == ()
    assert set(slim_graph(make_c(3)).edges) == {(0, 2)}
    assert slim_graph(make_fat_star(3)).edges == ()


def test_special_minus_graph_examples():
    assert set(special_minus_graph(make_c(2)).edges) == {(0, 1)}
    assert set(special_minus_graph(make_fat_star(3)).edges) == {(0, 1), (0, 2), (1, 2)}
    two = HoffmanGraph.build([0, 1], [2], [(0, 1), (0, 2), (1, 2)])
    assert special_matrix(two)[0, 1] == 0
    assert special_graph(two).minus == frozenset() and special_graph(two).plus == frozenset()


def test_generated_subgraph_examples():
    c3 = make_c(3)
    assert generated_subgraph(c3, c3.slim) == c3
    sub = generated_subgraph(c3, [0])
    assert sub.slim == (0,) and set(sub.fat) == {3, 4}  # f_1 and f_{1,2}
    assert generated_subgraph(c3, []) == HoffmanGraph.build([], [], [])
    with pytest.raises(HoffmanError):
        generated_subgraph(c3, [3])


# --- isomorphism ------------------------------------------------------------------------------

def test_isomorphism_examples():
    c2 = make_c(2)
    relabelled = c2.relabel({0: 10, 1: 11, 2: 12, 3: 13, 4: 14})
    assert hoffman_isomorphic(c2, relabelled)
    assert not hoffman_isomorphic(make_h_t(3), make_fat_star(3))
    c3 = make_c(3)
    # y_3 becomes fat and its fat leaf f_3 becomes slim: same underlying graph
    swapped = HoffmanGraph((0, 1, 5), (3, 4, 2), c3.edges)
    assert not hoffman_isomorphic(c3, swapped)


@given(hoffman_graphs(max_slim=4, max_fat=3), hoffman_graphs(max_slim=4, max_fat=3))
def test_isomorphism_matches_networkx(h1, h2):
    expected = nx.is_isomorphic(to_nx(h1), to_nx(h2), node_match=lambda a, b: a["kind"] == b["kind"])
    assert hoffman_isomorphic(h1, h2) == expected


@given(hoffman_graphs(), st.randoms(use_true_random=False))
def test_isomorphism_under_relabelling(h, rng):
    labels = list(range(100, 100 + len(h.vertices)))
    rng.shuffle(labels)
    m = dict(zip(h.vertices, labels))
    assert hoffman_isomorphic(h, h.relabel(m))


def test_induced_subgraph():
    assert is_induced_hoffman_subgraph(make_c(3), make_c(5)) is False  # f_3 sits on y_3 only in c_3
    assert is_induced_hoffman_subgraph(make_h_t(2), make_h_t(3))
    assert is_induced_hoffman_subgraph(generated_subgraph(make_c(5), [0, 1]), make_c(5))


# --- sums --------------------------------------------------------------------------------------

def test_direct_sum_sharing_one_fat():
    a = h3("a", ["f", "p", "q"])
    b = h3("b", ["f", "r", "s"])
    d = direct_sum(a, b)
    assert len(d.slim) == 2 and len(d.fat) == 5
    assert frozenset(("a", "b")) in d.edges
    assert special_matrix(d).tolist() == [[-3, 0], [0, -3]]
    assert len(decompose(d)) == 2


def test_direct_sum_disjoint():
    d = direct_sum(h3("a", ["p"]), h3("b", ["q"]))
    assert special_matrix(d).tolist() == [[-1, 0], [0, -1]]
    assert frozenset(("a", "b")) not in d.edges
    assert lambda_min_cmp3(direct_sum(h3("a", ["p", "q", "r"]), h3("b", ["s"]))) is EQ


def test_direct_sum_rejects_double_share():
    with pytest.raises(HoffmanError):
        direct_sum(h3("a", ["f", "g", "p"]), h3("b", ["f", "g", "q"]))


def test_decompose_examples():
    assert decompose(make_h_t(3)) == [make_h_t(3)]
    for m in range(2, 9):
        assert len(decompose(make_c(m))) == 1 and is_indecomposable(make_c(m))


@given(hoffman_graphs())
def test_decompose_blocks_and_lambda(h):
    parts = decompose(h)
    assert sorted(v for p in parts for v in p.slim) == sorted(h.slim)
    sp = special_matrix(h)
    pos = {v: i for i, v in enumerate(h.slim)}
    for p in parts:
        idx = [pos[v] for v in p.slim]
        assert np.array_equal(special_matrix(p), sp[np.ix_(idx, idx)])
    # off-block entries vanish
    owner = {v: i for i, p in enumerate(parts) for v in p.slim}
    for x in h.slim:
        for y in h.slim:
            if owner[x] != owner[y]:
                assert sp[pos[x], pos[y]] == 0
    verdicts = {lambda_min_cmp3(p) for p in parts}
    whole = lambda_min_cmp3(h)
    assert whole is (LT if LT in verdicts else EQ if EQ in verdicts else GT)


def test_stripped_sum_examples():
    a = h3("a", ["f", "p", "q"])
    b = h3("b", ["f", "r", "s"])
    s = stripped_sum([a, b])
    assert len(s.slim) == 2 and frozenset(("a", "b")) in s.edges
    assert s.weight("a") == s.weight("b") == 2
    assert stripped_sum([a]) == a
    assert check_tree_like_stripping([a, b])


def test_stripped_sum_chain_of_h3():
    # m copies glued in a path at single fats: slim path, fats hang off it
    m = 6
    parts = []
    for i in range(m):
        fats = [("g", i - 1) if i else ("l", i), ("g", i) if i < m - 1 else ("r", i), ("x", i)]
        parts.append(h3(("s", i), fats))
    assert check_tree_like_stripping(parts)
    s = stripped_sum(parts)
    assert s.is_tree_like()
    g = slim_graph(s)
    assert g.is_tree() and max(g.degrees()) <= 2
    assert all(len(s.nbrs[v]) == 3 for v in s.slim)  # valency 3 counting fat leaves
    assert lambda_min_cmp3(s) is EQ


def test_stripping_conditions():
    a, b = h3("a", ["f", "g", "p"]), h3("b", ["f", "g", "q"])
    assert check_tree_like_stripping([a, b]).violated == "pairwise_fat"
    c, d = h3("c", ["p"]), h3("d", ["q"])
    assert check_tree_like_stripping([c, d]).violated == "connected"
    x, y, z = h3("x", ["u", "v", "p"]), h3("y", ["u", "w", "q"]), h3("z", ["v", "w", "r"])
    chk = check_tree_like_stripping([x, y, z])
    assert not chk and chk.violated == "acyclic"
    assert not stripped_sum([x, y, z]).is_tree_like()
    star = make_fat_star(2).relabel({0: "s0", 1: "s1", 2: "f"})
    star2 = make_fat_star(2).relabel({0: "t0", 1: "t1", 2: "f"})
    assert check_tree_like_stripping([star, star2]).violated == "leaf"
    with pytest.raises(HoffmanError):
        stripped_sum([h3("a", ["f"]), h3("b", ["f"]), h3("c", ["f"])])


# --- fat attachments and saturation -----------------------------------------------------------

def test_attach_fat_examples():
    e = HoffmanGraph.build([0, 1], [], [(0, 1)])
    one = attach_fat(e, [0])
    assert one.weight(0) == 1 and one.weight(1) == 0
    both = attach_fat(e, [0, 1])
    assert special_matrix(both).tolist() == [[-1, 0], [0, -1]]
    assert special_matrix(attach_fat(make_h_t(3), [0])).tolist() == [[-4]]


def test_saturation_examples():
    assert is_saturated(make_fat_star(3))
    assert is_saturated(make_h_t(3))
    assert not is_saturated(make_h_t(1))
    assert saturate_preserving_ir(make_h_t(3)) == make_h_t(3)
    s = saturate_preserving_ir(HoffmanGraph.build([0], [], []))
    assert hoffman_isomorphic(s, make_h_t(3))


@pytest.mark.parametrize("m", [2, 3, 4, 6])
def test_saturating_c_m(m):
    c = make_c(m)
    s = saturate_preserving_ir(c)
    assert s.is_fat() and is_saturated(s)
    assert slim_graph(s) == slim_graph(c)
    assert lambda_min_cmp3(s) is EQ and is_indecomposable(s)


def test_iter_saturations_distinct_and_valid():
    got = []
    for s in iter_saturations_preserving_ir(HoffmanGraph.build([0, 1], [], [(0, 1)])):
        assert s.is_fat() and is_saturated(s)
        got.append(s)
    assert got
    with pytest.raises(HoffmanError):
        next(iter_saturations_preserving_ir(make_h_t(4)))


@given(tree_like())
def test_random_tree_like_has_simple_lambda_at_minus3(h):
    assert h.is_tree_like()
    assert lambda_min_cmp3(h) is not LT
    if lambda_min_cmp3(h) is EQ:
        assert multiplicity_of(h, -3) == 1
