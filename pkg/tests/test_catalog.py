import numpy as np
import pytest

from hoffman.catalog import (CATALOG_NAMES, catalog_member, family_F, fatten, make_c, make_esimilar_seedling,
                             make_f_prime_3, make_fat_star, make_h_t, make_psi_c)
from hoffman.hoffman import (HoffmanError, is_indecomposable, lambda_min_cmp3, multiplicity_of, slim_graph,
                             special_graph, special_matrix)
from hoffman.linalg import LambdaOrder, exact_rank
from hoffman.representation import solve_reduced_integral, verify_reduced
from hoffman.signed import EdgeSignedGraph, switching_equivalent
from hoffman.smith import smith_graph

EQ = LambdaOrder.EQUAL


def test_h_t():
    for t in (1, 2, 3):
        assert special_matrix(make_h_t(t)).tolist() == [[-t]]
    with pytest.raises(ValueError):
        make_h_t(0)


def test_fat_star():
    assert special_matrix(make_fat_star(3)).tolist() == [[-1] * 3] * 3
    assert lambda_min_cmp3(make_fat_star(3)) is EQ
    assert make_fat_star(1) == make_h_t(1)
    two = special_matrix(make_fat_star(2))
    assert two.tolist() == [[-1, -1], [-1, -1]]
    assert sorted(np.round(np.linalg.eigvalsh(two)).astype(int)) == [-2, 0]


def test_c_m_shape():
    c2 = make_c(2)
    assert len(c2.slim) == 2 and slim_graph(c2).edges == ()
    assert sum(1 for e in c2.edges if len(e & set(c2.fat)) == 1) == 4
    assert set(slim_graph(make_c(3)).edges) == {(0, 2)}
    c6 = make_c(6)
    assert set(slim_graph(c6).edges) == {(0, 2), (1, 3), (2, 4), (3, 5)}
    assert len(c6.vertices) == 9
    with pytest.raises(ValueError):
        make_c(1)


def test_psi_formulas():
    psi5 = make_psi_c(5)
    assert psi5.vectors[3] == (0, 1, -1, 1)  # e2 - e3 + e4
    assert psi5.vectors[4] == (0, 0, 1, 1)  # e3 + e4
    psi3 = make_psi_c(3)
    assert psi3.vectors == {0: (1, 0), 1: (-1, 1), 2: (1, 1)}
    assert np.array_equal(psi5.gram(make_c(5).slim), special_matrix(make_c(5)) + 3 * np.eye(5, dtype=int))


@pytest.mark.parametrize("m", range(2, 21))
def test_c_m_properties(m):
    c = make_c(m)
    assert lambda_min_cmp3(c) is EQ
    assert multiplicity_of(c, -3) == 1
    assert verify_reduced(c, make_psi_c(m))
    sp = special_matrix(c) + 3 * np.eye(m, dtype=int)
    assert exact_rank(sp.tolist()) == m - 1
    assert is_indecomposable(c) and c.is_tree_like()


def test_esimilar_construction():
    e6 = smith_graph("E6~")
    h = make_esimilar_seedling(e6)
    assert len(h.slim) == 7 and len(h.fat) == 7
    sg = special_graph(h)
    assert sg.minus == frozenset() and set(sg.plus) == set(e6.edges)
    h1 = make_esimilar_seedling(e6, [(5, 6)])  # an outer edge of a leg
    assert h1.fat_neighbors(5) == h1.fat_neighbors(6)
    assert len(h1.fat) == 6  # one shared plus 5 private


@pytest.mark.parametrize("kind", ["E6~", "E7~", "E8~"])
def test_esimilar_lambda(kind):
    g = smith_graph(kind)
    from hoffman.signed import enumerate_minus_matchings
    for cls in enumerate_minus_matchings(g):
        h = make_esimilar_seedling(g, cls.representative)
        assert lambda_min_cmp3(h) is EQ
        # Sp is -I - A of a signed copy of the base tree; trees have one switching class
        assert np.array_equal(np.diag(special_matrix(h)), -np.ones(g.n, dtype=int))
        assert switching_equivalent(special_graph(h), EdgeSignedGraph.from_graph(g))


def test_esimilar_rejects_bad_matching():
    e6 = smith_graph("E6~")
    with pytest.raises(HoffmanError):
        make_esimilar_seedling(e6, [(0, 1), (1, 2)])
    with pytest.raises(HoffmanError):
        make_esimilar_seedling(e6, [(3, 6)])


def test_fatten():
    h = fatten(make_esimilar_seedling("E6", []).induced(range(7)))
    assert all(h.weight(x) == 1 for x in h.slim)


def test_f_prime_3():
    f = make_f_prime_3()
    assert [f.weight(x) for x in f.slim] == [2, 1, 1]
    assert slim_graph(f).edges == ()
    assert lambda_min_cmp3(f) is EQ
    assert solve_reduced_integral(f).found


def test_family_F():
    fam = family_F(6)
    assert [m.tag for m in fam[:3]] == ["F-prime-1", "F-prime-2", "F-prime-3"]
    assert [m.tag for m in fam[3:]] == [f"C({m})" for m in range(2, 7)]
    for member in fam:
        assert lambda_min_cmp3(member.graph) is EQ
        assert solve_reduced_integral(member.graph).found
        assert member.graph.is_tree_like() and is_indecomposable(member.graph)
    with pytest.raises(ValueError):
        family_F(1)


def test_catalog_lookup():
    for name in CATALOG_NAMES:
        h, psi = catalog_member(name)
        if psi is not None:
            assert verify_reduced(h, psi)
    h, psi = catalog_member("h_t", 2)
    assert psi.dim == 1 and verify_reduced(h, psi)
    with pytest.raises(ValueError):
        catalog_member("nope")
