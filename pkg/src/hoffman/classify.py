"""Enumeration and verification engines.

* brute-force census of integrally representable trees,
* the stripped-sum construction of norm-3 trees from family F,
* bounded reducibility and seedling checks,
* fat 3-seedlings over the E~ Smith graphs,
* the small tree-like enumeration that pins down family F'.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .catalog import family_F, make_esimilar_seedling, make_fat_star
from .graph import Graph
from .hoffman import (HoffmanError, HoffmanGraph, attach_fat, check_tree_like_stripping, decompose,
                      is_indecomposable, is_induced_hoffman_subgraph, lambda_min_cmp3, slim_graph,
                      stripped_sum)
from .iso import is_induced_subgraph
from .linalg import LambdaOrder
from .representation import Outcome, ReducedRep, solve_reduced_integral
from .signed import enumerate_minus_matchings
from .smith import smith_graph
from .trees import canonical_code, enumerate_free_trees, from_canonical_code, tree_code

WORKERS_ENV = "HOFFMAN_WORKERS"
DEFAULT_NODE_BUDGET = 10**7


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _as_hoffman(g: Graph) -> HoffmanGraph:
    return HoffmanGraph.build(range(g.n), (), g.edges)


def _ir(h: HoffmanGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool | None:
    """Representability as True/False, None when the budget binds."""
    res = solve_reduced_integral(h, node_budget=node_budget)
    if res.outcome is Outcome.BUDGET_EXCEEDED:
        return None
    return res.found


# --- tree census ----------------------------------------------------------------

@dataclass(frozen=True)
class TreeCensusEntry:
    code: bytes
    n: int
    lambda_vs_minus3: LambdaOrder
    representable: bool | None  # None: budget exhausted
    witness: ReducedRep | None = None

    @property
    def tree(self) -> Graph:
        return from_canonical_code(self.code)

    def __post_init__(self):
        if self.representable and self.lambda_vs_minus3 is LambdaOrder.LESS:
            raise ValueError("a representable tree cannot have lambda_min < -3")


def census_entry(t: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> TreeCensusEntry:
    h = _as_hoffman(t)
    cmp = lambda_min_cmp3(h)
    res = solve_reduced_integral(h, node_budget=node_budget)
    rep = {Outcome.FOUND: True, Outcome.NOT_REPRESENTABLE: False}.get(res.outcome)
    return TreeCensusEntry(canonical_code(t), t.n, cmp, rep, res.rep)


def _census_chunk(args):
    codes, budget = args
    return [census_entry(from_canonical_code(c), budget) for c in codes]


def brute_force_ir_trees(n_max: int, *, node_budget: int = DEFAULT_NODE_BUDGET,
                         workers: int | None = None) -> list[TreeCensusEntry]:
    """One entry per unlabelled tree on 1..n_max vertices, ordered by (n, code)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    codes = sorted((canonical_code(t) for n in range(1, n_max + 1) for t in enumerate_free_trees(n)),
                   key=lambda c: (_code_size(c), c))
    workers = workers or worker_count()
    if workers == 1:
        return _census_chunk((codes, node_budget))
    chunks = [codes[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(workers) as ex:
        parts = list(ex.map(_census_chunk, [(c, node_budget) for c in chunks]))
    entries = [e for part in parts for e in part]
    return sorted(entries, key=lambda e: (e.n, e.code))


def _code_size(code: bytes) -> int:
    return code.count(b"(")


# --- stripped-sum construction ---------------------------------------------------

def _glue(state: HoffmanGraph, f, part: HoffmanGraph, g) -> HoffmanGraph | None:
    """Stripped sum of ``state`` and ``part`` sharing exactly the fat ``f`` (= ``g`` in part).

    Returns None when the shared fat is a leaf in neither summand.
    """
    if len(state.nbrs[f]) != 1 and len(part.nbrs[g]) != 1:
        return None
    base = max(v for v in state.vertices) + 1
    mp = {v: base + i for i, v in enumerate(part.vertices)}
    mp[g] = f
    p = part.relabel(mp)
    left = state.slim_neighbors(f)
    right = p.slim_neighbors(f)
    edges = [tuple(e) for e in state.edges if f not in e]
    edges += [tuple(e) for e in p.edges if f not in e]
    edges += [(x, y) for x in left for y in right]
    fats = [v for v in state.fat if v != f] + [v for v in p.fat if v != f]
    return HoffmanGraph.build(state.slim + p.slim, fats, edges).integer_labels()


def _fat_orbit_reps(h: HoffmanGraph) -> list:
    """One fat vertex per automorphism orbit (tree-like ``h``)."""
    adj, colors = h.adjacency_lists()
    reps, seen = [], set()
    for i, g in enumerate(h.vertices):
        if colors[i] != "f":
            continue
        marked = list(colors)
        marked[i] = "g"
        key = tree_code(adj, marked)
        if key not in seen:
            seen.add(key)
            reps.append(g)
    return reps


def _slim_tree(h: HoffmanGraph) -> Graph:
    return slim_graph(h)


def _member_sites(max_slim: int) -> list:
    members = [m.graph.integer_labels() for m in family_F(max(2, max_slim))]
    members = [m for m in members if len(m.slim) <= max_slim]
    return members, [(m, g) for m in members for g in _fat_orbit_reps(m)]


def stripped_sum_states(max_slim: int, *, max_size: int | None = None) -> dict[bytes, HoffmanGraph]:
    """Every tree-like stripped sum of family-F members reachable one gluing at a time.

    Each step glues one more member at a single open fat vertex (gluing at
    two or more would close a cycle). States are deduplicated by canonical
    code and keep at most ``max_slim`` slims. With ``max_size`` set, a state
    with ``s`` slims and ``o`` open fats is kept only if ``s + o <= max_size``:
    closing the ``o`` fats needs ``o`` more members, each bringing a slim.
    """
    members, sites = _member_sites(max_slim)

    def keep(s, o):
        return s <= max_slim and (max_size is None or s + o <= max_size)

    seen = {}
    for m in members:
        if keep(len(m.slim), len(m.fat)):
            seen.setdefault(m.code(), m)
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for st in frontier:
            if not st.fat:
                continue
            for f in _fat_orbit_reps(st):
                for m, g in sites:
                    if not keep(len(st.slim) + len(m.slim), len(st.fat) + len(m.fat) - 2):
                        continue
                    new = _glue(st, f, m, g)
                    if new is None:
                        continue
                    c = new.code()
                    if c not in seen:
                        seen[c] = new
                        nxt.append(new)
        frontier = nxt
    return seen


def construct_ir_trees_from_F(n_max: int) -> set[bytes]:
    """Canonical codes of all-slim stripped sums of family-F members with <= n_max vertices."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    states = stripped_sum_states(n_max, max_size=n_max)
    return {canonical_code(_slim_tree(h)) for h in states.values() if not h.fat}


def close_fat_leaves(h: HoffmanGraph) -> Graph:
    """Glue a 3-slim fat star at every fat vertex of ``h`` (all must be leaves).

    Slims of ``h`` keep positions ``0..|V_s|-1`` in the returned tree.
    """
    star = make_fat_star(3)
    for f in h.fat:
        if len(h.nbrs[f]) != 1:
            raise HoffmanError(f"leftover fat {f!r} is not a leaf")
    order = {v: i for i, v in enumerate(h.vertices)}
    g = h.relabel(order)
    while g.fat:
        g = _glue(g, g.fat[0], star, 3)
    return _slim_tree(g)


def complete_to_radius3(t: Graph, decomposition: Iterable[HoffmanGraph]) -> Graph:
    """All-slim tree with lambda_min = -3 containing ``t``, via ``h_s(decomposition)``.

    ``decomposition`` lists tree-like Hoffman graphs sharing fats by label;
    their stripped sum must have slim graph ``t`` and only fat leaves left
    over, each of which is then closed with a 3-slim fat star. An empty
    decomposition is allowed only for a tree that already has no fats to
    close, and returns ``t`` unchanged.
    """
    parts = list(decomposition)
    if not parts:
        return t
    chk = check_tree_like_stripping(parts)
    if not chk:
        raise HoffmanError(f"decomposition invalid: {chk.detail}")
    h = stripped_sum(parts)
    if canonical_code(_slim_tree(h)) != canonical_code(t):
        raise HoffmanError("decomposition does not have t as its slim graph")
    return close_fat_leaves(h)


@dataclass
class MainTheoremReport:
    n_max: int
    slack: int
    census_codes: set  # representable trees with lambda_min = -3
    constructed_codes: set
    # representable trees with lambda_min > -3, mapped to the vertex count of
    # the fat-star completion of a leaf-fat stripped sum with that slim tree
    completions: dict
    no_completion: list
    # trees with lambda_min > -3 and a constructed tree on <= n_max + slack
    # vertices containing them (None: no such constructed tree)
    slack_hosts: dict
    inconclusive: list = field(default_factory=list)

    @property
    def equality(self) -> bool:
        return self.census_codes == self.constructed_codes

    @property
    def ok(self) -> bool:
        return self.equality and not self.no_completion and not self.inconclusive

    @property
    def slack_failures(self) -> list:
        return sorted(c for c, host in self.slack_hosts.items() if host is None)

    @property
    def within_slack(self) -> bool:
        return not self.slack_failures

    def summary(self) -> dict:
        sizes = list(self.completions.values())
        return {
            "n_max": self.n_max,
            "equality": self.equality,
            "census_minus3": len(self.census_codes),
            "constructed": len(self.constructed_codes),
            "greater_trees": len(self.slack_hosts),
            "completed": len(self.completions),
            "no_completion": len(self.no_completion),
            "largest_completion": max(sizes, default=0),
            "slack": self.slack,
            "embedded_within_slack": len(self.slack_hosts) - len(self.slack_failures),
            "inconclusive": len(self.inconclusive),
            "ok": self.ok,
        }


def verify_main_theorem(n_max: int, *, slack: int = 6, census: list | None = None,
                        check_completions: bool = True) -> MainTheoremReport:
    """Cross-check the census against the stripped-sum construction.

    * the representable trees with lambda_min = -3 must be exactly the
      construction outputs;
    * every representable tree with lambda_min > -3 must be the slim tree of
      a stripped sum whose leftover fats are leaves; closing those with fat
      stars gives a construction output containing it;
    * separately, it records which of them already sit inside a construction
      output on at most ``n_max + slack`` vertices.
    """
    if n_max < 1 or slack < 0:
        raise ValueError("need n_max >= 1 and slack >= 0")
    if census is None:
        census = brute_force_ir_trees(n_max)
    equal = {e.code for e in census if e.representable and e.lambda_vs_minus3 is LambdaOrder.EQUAL}
    greater = [e for e in census if e.representable and e.lambda_vs_minus3 is LambdaOrder.GREATER]
    inconclusive = sorted(e.code for e in census if e.representable is None)
    constructed = construct_ir_trees_from_F(n_max)

    leafy: dict[bytes, HoffmanGraph] = {}
    for h in stripped_sum_states(n_max).values():
        if all(len(h.nbrs[f]) == 1 for f in h.fat):
            c = canonical_code(_slim_tree(h))
            if c not in leafy or len(h.fat) < len(leafy[c].fat):
                leafy[c] = h
    completions, missing = {}, []
    for e in greater:
        h = leafy.get(e.code)
        if h is None:
            missing.append(e.code)
            continue
        big = close_fat_leaves(h)
        if check_completions:
            hb = _as_hoffman(big)
            if lambda_min_cmp3(hb) is not LambdaOrder.EQUAL:
                raise AssertionError("fat-star completion does not have lambda_min = -3")
            if not is_induced_subgraph(_adj(e.tree), _adj(big)):
                raise AssertionError("completion does not contain the tree")
        completions[e.code] = big.n

    hosts = [from_canonical_code(c) for c in sorted(construct_ir_trees_from_F(n_max + slack))]
    slack_hosts = {}
    for e in greater:
        t = e.tree
        slack_hosts[e.code] = next((canonical_code(g) for g in hosts
                                    if g.n >= t.n and is_induced_subgraph(_adj(t), _adj(g))), None)
    return MainTheoremReport(n_max, slack, equal, constructed, completions, sorted(missing),
                             slack_hosts, inconclusive)


def _adj(g: Graph) -> list[set]:
    return [set(a) for a in g.adj]


# --- reducibility and seedlings --------------------------------------------------

@dataclass(frozen=True)
class Reducible:
    attachments: tuple  # tuple of slim-label tuples, one per new fat
    parts: tuple  # indecomposable factors of the extended graph

    @property
    def reducible(self) -> bool:
        return True


@dataclass(frozen=True)
class NoWitnessWithinBudget:
    budget: int

    @property
    def reducible(self) -> bool:
        return False


ReducibilityVerdict = Reducible | NoWitnessWithinBudget


def _subsets(items) -> list[tuple]:
    items = list(items)
    return [c for r in range(1, len(items) + 1) for c in combinations(items, r)]


def is_reducible_bounded(h: HoffmanGraph, fat_budget: int | None = None) -> ReducibilityVerdict:
    """Search for at most ``fat_budget`` new fats making ``h`` decomposable with lambda_min >= -3.

    Only fat vertices are added. Adding fats can only lower lambda_min, so
    branches are cut as soon as it drops below -3.
    """
    if lambda_min_cmp3(h) is LambdaOrder.LESS:
        raise HoffmanError("is_reducible_bounded needs lambda_min >= -3")
    if fat_budget is None:
        fat_budget = len(h.slim)
    subs = _subsets(h.slim)

    def rec(g, start, left, chosen):
        if len(chosen) > 0 and not is_indecomposable(g):
            parts = decompose(g)
            if all(set(p.slim) & set(h.slim) for p in parts):
                return Reducible(tuple(chosen), tuple(parts))
        if left == 0:
            return None
        for i in range(start, len(subs)):
            g2 = attach_fat(g, subs[i])
            if lambda_min_cmp3(g2) is LambdaOrder.LESS:
                continue
            found = rec(g2, i, left - 1, chosen + [subs[i]])
            if found is not None:
                return found
        return None

    return rec(h, 0, fat_budget, []) or NoWitnessWithinBudget(fat_budget)


def ir_fat_extension_decomposable(t: HoffmanGraph, node_budget: int = DEFAULT_NODE_BUDGET):
    """An integrally representable, decomposable graph obtained from ``t`` by adding fats.

    Returns the extension, or None if every such extension is indecomposable.
    The search is finite: representability forces every slim weight <= 3.
    """
    subs = _subsets(t.slim)

    def rec(g, start):
        for i in range(start, len(subs)):
            if any(g.weight(x) >= 3 for x in subs[i]):
                continue
            g2 = attach_fat(g, subs[i])
            if lambda_min_cmp3(g2) is LambdaOrder.LESS:
                continue
            ok = _ir(g2, node_budget)
            if ok is None:
                raise HoffmanError("solver budget exhausted during extension search")
            if not ok:
                continue
            if not is_indecomposable(g2):
                return g2
            found = rec(g2, i)
            if found is not None:
                return found
        return None

    if not is_indecomposable(t):
        return t
    return rec(t, 0)


def is_seedling_bounded(t: HoffmanGraph, fat_budget: int | None = None) -> bool | None:
    """Bounded 3-seedling test for a tree-like Hoffman graph.

    With lambda_min = -3, bounded irreducibility suffices. Otherwise every
    one-vertex tree-like extension (slim leaf anywhere, fat leaf on a slim)
    with lambda_min >= -3 must be reducible. Returns None when the only
    evidence is a bounded search that found no witness.
    """
    if not t.is_tree_like():
        raise HoffmanError("is_seedling_bounded expects a tree-like Hoffman graph")
    cmp = lambda_min_cmp3(t)
    if cmp is LambdaOrder.LESS:
        raise HoffmanError("is_seedling_bounded needs lambda_min >= -3")
    if is_reducible_bounded(t, fat_budget).reducible:
        return False
    if cmp is LambdaOrder.EQUAL:
        return True
    t = t.integer_labels()
    new = len(t.vertices)
    for ext in _one_vertex_extensions(t, new):
        if lambda_min_cmp3(ext) is LambdaOrder.LESS:
            continue
        if not is_reducible_bounded(ext, fat_budget).reducible:
            return False
    return None


def _one_vertex_extensions(t: HoffmanGraph, new):
    for v in t.vertices:
        yield HoffmanGraph(t.slim + (new,), t.fat, t.edges | {frozenset((v, new))})
    for x in t.slim:
        yield attach_fat(t, [x], new)


def enumerate_fat_3_seedlings(base: str) -> list[HoffmanGraph]:
    """One fat 3-seedling per (-)-matching class of E6~, E7~ or E8~."""
    g = smith_graph(_base_kind(base))
    return [make_esimilar_seedling(g, cls.representative) for cls in enumerate_minus_matchings(g)]


def _base_kind(base: str) -> str:
    key = base.strip().lower().replace("~", "").replace("tilde", "").replace("_", "")
    kinds = {"e6": "E6~", "e7": "E7~", "e8": "E8~"}
    if key not in kinds:
        raise ValueError(f"base must be one of e6, e7, e8, not {base!r}")
    return kinds[key]


# --- small tree-like Hoffman graphs ---------------------------------------------

@dataclass
class SmallTreeLike:
    """Result of :func:`enumerate_small_tree_like`."""

    graphs: list  # every candidate, deduplicated
    step2: list  # those whose IR fat-only extensions are all indecomposable
    maximal: list  # maximal members of ``step2`` under induced containment


def enumerate_small_tree_like(max_slim: int, *, node_budget: int = DEFAULT_NODE_BUDGET) -> SmallTreeLike:
    """Tree-like Hoffman graphs with <= max_slim slims, weights <= 3, lambda_min >= -3, IR.

    Grown from a single slim by adding leaves (a slim leaf anywhere, a fat
    leaf on a slim); both properties are inherited by induced subgraphs, so
    pruning on them loses nothing.
    """
    if not 1 <= max_slim <= 4:
        raise ValueError("max_slim must be in 1..4")
    first = HoffmanGraph.build([0], [], [])
    level = {first.code(): first}
    found = dict(level)
    while level:
        nxt = {}
        for t in level.values():
            new = len(t.vertices)
            for ext in _one_vertex_extensions(t, new):
                if len(ext.slim) > max_slim or any(ext.weight(x) > 3 for x in ext.slim):
                    continue
                c = ext.code()
                if c in found or c in nxt:
                    continue
                if lambda_min_cmp3(ext) is LambdaOrder.LESS:
                    continue
                ok = _ir(ext, node_budget)
                if ok is None:
                    raise HoffmanError("solver budget exhausted")
                if ok:
                    nxt[c] = ext
        found.update(nxt)
        level = nxt
    graphs = sorted(found.values(), key=lambda h: (len(h.slim), len(h.fat), h.code()))
    step2 = [t for t in graphs if ir_fat_extension_decomposable(t, node_budget) is None]
    maximal = [t for t in step2
               if not any(u is not t and len(u.vertices) > len(t.vertices)
                          and is_induced_hoffman_subgraph(t, u) for u in step2)]
    return SmallTreeLike(graphs, step2, maximal)
