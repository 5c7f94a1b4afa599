"""Named Hoffman graphs: h^(t), fat stars, the chains c_m, E~-based seedlings, family F.

Label conventions (all integer, slims first):

* ``make_h_t(t)``: slim 0, fats 1..t.
* ``make_fat_star(k)``: slims 0..k-1, fat k.
* ``make_c(m)``: slim ``y_i`` is ``i-1``; fats ``f_1 = m``, ``f_{1,2} = m+1``, ``f_m = m+2``.
* ``make_esimilar_seedling``: slims are the base-tree vertices, then one fat per
  matching edge (sorted), then one private fat per unmatched vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .hoffman import HoffmanError, HoffmanGraph
from .representation import ReducedRep
from .signed import is_matching
from .smith import smith_graph


def make_h_t(t: int) -> HoffmanGraph:
    """One slim vertex with ``t`` fat neighbours."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return HoffmanGraph.build([0], range(1, t + 1), [(0, f) for f in range(1, t + 1)])


def make_fat_star(k: int) -> HoffmanGraph:
    """One fat vertex on ``k`` pairwise non-adjacent slims."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return HoffmanGraph.build(range(k), [k], [(x, k) for x in range(k)])


def make_c(m: int) -> HoffmanGraph:
    """The chain c_m: slims y_1..y_m with y_i ~ y_{i+2}, fats f_1, f_{1,2}, f_m."""
    if m < 2:
        raise ValueError("c_m needs m >= 2")
    f1, f12, fm = m, m + 1, m + 2
    edges = [(i, i + 2) for i in range(m - 2)]
    edges += [(0, f1), (0, f12), (1, f12), (m - 1, fm)]
    return HoffmanGraph.build(range(m), [f1, f12, fm], edges)


def make_psi_c(m: int) -> ReducedRep:
    """The explicit (m-1)-dimensional reduced representation of c_m."""
    if m < 2:
        raise ValueError("c_m needs m >= 2")
    if m == 2:
        return ReducedRep(1, {0: (1,), 1: (-1,)})
    dim = m - 1

    def e(*terms):
        v = [0] * dim
        for coef, idx in terms:  # idx is 1-based
            v[idx - 1] += coef
        return tuple(v)

    vecs = {0: e((1, 1)), 1: e((-1, 1), (1, 2))}
    for i in range(3, m):
        vecs[i - 1] = e((1, i - 2), ((-1) ** (i - 1), i - 1), (1, i))
    vecs[m - 1] = e((1, m - 2), ((-1) ** (m - 1), m - 1))
    return ReducedRep(dim, vecs)


def _base_tree(base) -> Graph:
    if isinstance(base, Graph):
        return base
    return smith_graph(base)


def make_esimilar_seedling(base, minus_matching=()) -> HoffmanGraph:
    """Fat Hoffman graph whose special graph is ``base`` with (-)-edges on the matching.

    Each matched pair becomes two non-adjacent slims sharing one fat vertex;
    every other slim gets a private fat leaf, and the remaining base edges
    stay as slim-slim edges.
    """
    g = _base_tree(base)
    matching = sorted(tuple(sorted(e)) for e in minus_matching)
    if not set(matching) <= set(g.edges):
        raise HoffmanError("matching edges must be edges of the base graph")
    if not is_matching(matching):
        raise HoffmanError("minus edges must be pairwise non-incident")
    n = g.n
    fat = []
    edges = [e for e in g.edges if e not in set(matching)]
    nxt = n
    for u, v in matching:
        fat.append(nxt)
        edges += [(u, nxt), (v, nxt)]
        nxt += 1
    covered = {x for e in matching for x in e}
    for x in range(n):
        if x not in covered:
            fat.append(nxt)
            edges.append((x, nxt))
            nxt += 1
    return HoffmanGraph.build(range(n), fat, edges)


def fatten(h: HoffmanGraph) -> HoffmanGraph:
    """Attach one new fat leaf to every slim vertex."""
    start = max((v for v in h.vertices if isinstance(v, int)), default=-1) + 1
    new = list(range(start, start + len(h.slim)))
    edges = [tuple(e) for e in h.edges] + list(zip(h.slim, new))
    return HoffmanGraph.build(h.slim, h.fat + tuple(new), edges)


def make_f_prime_3() -> HoffmanGraph:
    """Third member of F': slim 0 with two fats 3 and 4, each shared with one more slim.

    Derived rather than transcribed: besides h^(3), the 3-slim fat star, c_2
    and c_3 it is the only maximal graph found by
    ``classify.enumerate_small_tree_like(3)``. Slims 1 and 2 have weight 1,
    there are no slim-slim edges, and lambda_min is exactly -3.
    """
    return HoffmanGraph.build(range(3), [3, 4], [(0, 3), (1, 3), (0, 4), (2, 4)])


@dataclass(frozen=True)
class FamilyFMember:
    graph: HoffmanGraph
    tag: str


def family_F(max_m: int) -> list[FamilyFMember]:
    """The three members of F' followed by c_2, ..., c_max_m."""
    if max_m < 2:
        raise ValueError("max_m must be >= 2")
    out = [FamilyFMember(make_h_t(3), "F-prime-1"),
           FamilyFMember(make_fat_star(3), "F-prime-2"),
           FamilyFMember(make_f_prime_3(), "F-prime-3")]
    out += [FamilyFMember(make_c(m), f"C({m})") for m in range(2, max_m + 1)]
    return out


CATALOG_NAMES = ("h_t", "fat_star", "c", "f_prime_3", "esimilar")


def catalog_member(name: str, param=None) -> tuple[HoffmanGraph, ReducedRep | None]:
    """Look up a member by name, returning the graph and its explicit psi if known."""
    if name == "h_t":
        t = int(param if param is not None else 3)
        h = make_h_t(t)
        if t > 3:
            return h, None
        return h, ReducedRep(3 - t, {0: (1,) * (3 - t)})
    if name == "fat_star":
        return make_fat_star(int(param if param is not None else 3)), None
    if name == "c":
        m = int(param if param is not None else 3)
        return make_c(m), make_psi_c(m)
    if name == "f_prime_3":
        return make_f_prime_3(), None
    if name == "esimilar":
        return make_esimilar_seedling(param or "E6"), None
    raise ValueError(f"unknown catalog member {name!r}; expected one of {CATALOG_NAMES}")
