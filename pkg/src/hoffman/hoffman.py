"""Hoffman graphs: special matrices and graphs, direct and stripped sums, saturation.

Vertices are arbitrary hashable labels (ints by convention, tuples are handy
when gluing copies together). Fat vertices are shared between summands *by
label*: two Hoffman graphs that both contain fat vertex ``f`` are glued at
``f`` by :func:`direct_sum` and :func:`stripped_sum`.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

import numpy as np

from .graph import Graph
from .iso import find_isomorphism, iter_embeddings
from .linalg import LambdaOrder, cmp_lambda_min, eigen_multiplicity_at
from .signed import EdgeSignedGraph
from .trees import is_tree_adj, tree_code

Vertex = Hashable


class HoffmanError(ValueError):
    """Invalid Hoffman graph or an operation whose combinatorial precondition fails."""


def _pair(u, v) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True, eq=False)
class HoffmanGraph:
    """A graph whose vertices are labelled slim or fat.

    Fat vertices are pairwise non-adjacent and each has a slim neighbour.
    ``slim`` and ``fat`` fix the vertex order used by matrices and exports.
    """

    slim: tuple
    fat: tuple
    edges: frozenset

    def __post_init__(self):
        slim, fat = tuple(self.slim), tuple(self.fat)
        object.__setattr__(self, "slim", slim)
        object.__setattr__(self, "fat", fat)
        if len(set(slim)) != len(slim) or len(set(fat)) != len(fat):
            raise HoffmanError("duplicate vertex labels")
        if set(slim) & set(fat):
            raise HoffmanError("a vertex cannot be both slim and fat")
        verts = set(slim) | set(fat)
        fatset = set(fat)
        edges = set()
        for e in self.edges:
            if len(e) != 2:
                raise HoffmanError(f"loop at {next(iter(e))!r}")
            u, v = tuple(e)
            if u not in verts or v not in verts:
                raise HoffmanError(f"edge {u!r}-{v!r} has an unknown endpoint")
            if u in fatset and v in fatset:
                raise HoffmanError(f"fat vertices {u!r} and {v!r} are adjacent")
            edges.add(_pair(u, v))
        object.__setattr__(self, "edges", frozenset(edges))
        for f in fat:
            if not self.nbrs[f]:
                raise HoffmanError(f"fat vertex {f!r} has no slim neighbour")

    @classmethod
    def build(cls, slim: Iterable, fat: Iterable, edges: Iterable) -> "HoffmanGraph":
        return cls(tuple(slim), tuple(fat), frozenset(_pair(u, v) for u, v in edges))

    # structure -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HoffmanGraph):
            return NotImplemented
        return (set(self.slim) == set(other.slim) and set(self.fat) == set(other.fat)
                and self.edges == other.edges)

    def __hash__(self):
        return hash((frozenset(self.slim), frozenset(self.fat), self.edges))

    def __repr__(self):
        return f"HoffmanGraph(slim={len(self.slim)}, fat={len(self.fat)}, edges={len(self.edges)})"

    @cached_property
    def nbrs(self) -> dict:
        nb = {v: set() for v in self.slim + self.fat}
        for e in self.edges:
            u, v = tuple(e)
            nb[u].add(v)
            nb[v].add(u)
        return nb

    @cached_property
    def _fatset(self) -> frozenset:
        return frozenset(self.fat)

    @property
    def vertices(self) -> tuple:
        return self.slim + self.fat

    def is_slim(self, v) -> bool:
        return v in self.nbrs and v not in self._fatset

    def fat_neighbors(self, x) -> set:
        return {f for f in self.nbrs[x] if f in self._fatset}

    def slim_neighbors(self, x) -> set:
        return {y for y in self.nbrs[x] if y not in self._fatset}

    def weight(self, x) -> int:
        """Number of fat neighbours of the slim vertex ``x``."""
        return len(self.fat_neighbors(x))

    def is_fat(self) -> bool:
        """Every slim vertex has a fat neighbour."""
        return all(self.fat_neighbors(x) for x in self.slim)

    def adjacency_lists(self) -> tuple[list[set], list[str]]:
        """Neighbour sets over positions (slim first, then fat) and 's'/'f' colours."""
        order = self.vertices
        pos = {v: i for i, v in enumerate(order)}
        adj = [{pos[w] for w in self.nbrs[v]} for v in order]
        colors = ["s"] * len(self.slim) + ["f"] * len(self.fat)
        return adj, colors

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        start = self.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_tree_like(self) -> bool:
        adj, _ = self.adjacency_lists()
        return is_tree_adj(adj)

    def code(self) -> bytes:
        """Canonical code of a tree-like Hoffman graph (labels included)."""
        adj, colors = self.adjacency_lists()
        return tree_code(adj, colors)

    def induced(self, vertices: Iterable) -> "HoffmanGraph":
        keep = set(vertices)
        return HoffmanGraph(tuple(v for v in self.slim if v in keep),
                            tuple(f for f in self.fat if f in keep),
                            frozenset(e for e in self.edges if e <= keep))

    def relabel(self, mapping) -> "HoffmanGraph":
        m = mapping if callable(mapping) else mapping.__getitem__
        return HoffmanGraph(tuple(m(v) for v in self.slim), tuple(m(f) for f in self.fat),
                            frozenset(frozenset(m(v) for v in e) for e in self.edges))

    def integer_labels(self) -> "HoffmanGraph":
        """Relabel to ``0..n-1``: slims first, then fats, in stored order."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        return self.relabel(pos)

    def remove_fat(self, fats: Iterable) -> "HoffmanGraph":
        drop = set(fats)
        return self.induced(v for v in self.vertices if v not in drop)

    # I/O -----------------------------------------------------------------

    def to_dict(self) -> dict:
        for v in self.vertices:
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                raise HoffmanError("JSON export needs integer labels; call integer_labels() first")
        edges = sorted(sorted(int(x) for x in e) for e in self.edges)
        return {"slim": [int(v) for v in self.slim], "fat": [int(f) for f in self.fat],
                "edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "HoffmanGraph":
        if not isinstance(d, dict) or not {"slim", "fat", "edges"} <= set(d):
            raise HoffmanError("expected an object with 'slim', 'fat' and 'edges'")
        return cls.build((int(v) for v in d["slim"]), (int(v) for v in d["fat"]),
                         ((int(u), int(v)) for u, v in d["edges"]))

    @classmethod
    def from_json(cls, text: str) -> "HoffmanGraph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "H") -> str:
        lines = [f"graph {name} {{"]
        for v in self.slim:
            lines.append(f'  "{v}" [shape=circle];')
        for f in self.fat:
            lines.append(f'  "{f}" [shape=square, style=filled];')
        pos = {v: i for i, v in enumerate(self.vertices)}
        for e in sorted(self.edges, key=lambda e: sorted(pos[v] for v in e)):
            u, v = sorted(e, key=pos.__getitem__)
            lines.append(f'  "{u}" -- "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


# --- matrices and eigenvalues ---------------------------------------------------

def special_matrix(h: HoffmanGraph) -> np.ndarray:
    """``A_s - C C^T`` indexed by ``h.slim``."""
    k = len(h.slim)
    sp = np.zeros((k, k), dtype=np.int64)
    fn = [h.fat_neighbors(x) for x in h.slim]
    for i, x in enumerate(h.slim):
        sp[i, i] = -len(fn[i])
        for j in range(i + 1, k):
            y = h.slim[j]
            val = (1 if y in h.nbrs[x] else 0) - len(fn[i] & fn[j])
            sp[i, j] = sp[j, i] = val
    return sp


def lambda_min_cmp(h: HoffmanGraph, r) -> LambdaOrder:
    if not h.slim:
        raise HoffmanError("a Hoffman graph without slim vertices has no eigenvalues")
    return cmp_lambda_min(special_matrix(h), r)


def lambda_min_cmp3(h: HoffmanGraph) -> LambdaOrder:
    """Exact comparison of ``lambda_min(h)`` with -3."""
    return lambda_min_cmp(h, -3)


def lambda_min_at_least(h: HoffmanGraph, r) -> bool:
    return lambda_min_cmp(h, r) is not LambdaOrder.LESS


def lambda_min_float(h: HoffmanGraph) -> float:
    return float(np.linalg.eigvalsh(special_matrix(h).astype(float))[0])


def multiplicity_of(h: HoffmanGraph, r) -> int:
    return eigen_multiplicity_at(special_matrix(h), r)


# --- derived graphs -------------------------------------------------------------

def slim_graph(h: HoffmanGraph) -> Graph:
    """Induced graph on the slim vertices, vertex ``i`` being ``h.slim[i]``."""
    pos = {v: i for i, v in enumerate(h.slim)}
    edges = []
    for e in h.edges:
        u, v = tuple(e)
        if u in pos and v in pos:
            edges.append((pos[u], pos[v]))
    return Graph.from_edges(len(h.slim), edges)


def special_graph(h: HoffmanGraph) -> EdgeSignedGraph:
    """Signs of the off-diagonal entries of ``Sp(h)``, on positions of ``h.slim``."""
    sp = special_matrix(h)
    k = len(h.slim)
    plus, minus = set(), set()
    for i in range(k):
        for j in range(i + 1, k):
            if sp[i, j] > 0:
                plus.add((i, j))
            elif sp[i, j] < 0:
                minus.add((i, j))
    return EdgeSignedGraph(k, frozenset(plus), frozenset(minus))


def special_minus_graph(h: HoffmanGraph) -> Graph:
    return special_graph(h).minus_graph()


@dataclass(frozen=True)
class WeightedMinusGraph:
    graph: Graph
    weight: tuple[int, ...]


def weighted_minus(h: HoffmanGraph) -> WeightedMinusGraph:
    return WeightedMinusGraph(special_minus_graph(h), tuple(h.weight(x) for x in h.slim))


def generated_subgraph(h: HoffmanGraph, w: Iterable) -> HoffmanGraph:
    """Induced Hoffman subgraph on ``w`` together with every fat neighbour of ``w``."""
    w = set(w)
    if any(not h.is_slim(x) for x in w):
        raise HoffmanError("generated_subgraph takes slim vertices only")
    fats = set().union(*(h.fat_neighbors(x) for x in w)) if w else set()
    return h.induced(w | fats)


def is_induced_hoffman_subgraph(small: HoffmanGraph, big: HoffmanGraph) -> bool:
    if len(small.slim) > len(big.slim) or len(small.fat) > len(big.fat):
        return False
    a1, c1 = small.adjacency_lists()
    a2, c2 = big.adjacency_lists()
    return next(iter_embeddings(a1, a2, c1, c2, bijective=False), None) is not None


def hoffman_isomorphic(h1: HoffmanGraph, h2: HoffmanGraph) -> bool:
    """Label-preserving graph isomorphism test."""
    if len(h1.slim) != len(h2.slim) or len(h1.fat) != len(h2.fat) or len(h1.edges) != len(h2.edges):
        return False
    if h1.is_tree_like() and h2.is_tree_like():
        return h1.code() == h2.code()
    a1, c1 = h1.adjacency_lists()
    a2, c2 = h2.adjacency_lists()
    return find_isomorphism(a1, a2, c1, c2) is not None


# --- sums and decomposition -------------------------------------------------------

def direct_sum(h1: HoffmanGraph, h2: HoffmanGraph) -> HoffmanGraph:
    """Glue along common fat labels; cross slims sharing one fat become adjacent."""
    if set(h1.slim) & set(h2.vertices) or set(h2.slim) & set(h1.vertices):
        raise HoffmanError("summands must have disjoint slim vertices (only fat labels may be shared)")
    edges = set(h1.edges) | set(h2.edges)
    shared = set(h1.fat) & set(h2.fat)
    if shared:
        for x in h1.slim:
            fx = h1.fat_neighbors(x) & shared
            if not fx:
                continue
            for y in h2.slim:
                common = fx & h2.fat_neighbors(y)
                if len(common) >= 2:
                    raise HoffmanError(f"slims {x!r} and {y!r} share {len(common)} fat vertices")
                if common:
                    edges.add(_pair(x, y))
    fat = h1.fat + tuple(f for f in h2.fat if f not in set(h1.fat))
    return HoffmanGraph(h1.slim + h2.slim, fat, frozenset(edges))


def special_components(h: HoffmanGraph) -> list[list]:
    """Connected components of the special graph, as lists of slim labels."""
    sp = special_matrix(h)
    k = len(h.slim)
    seen = [False] * k
    comps = []
    for s in range(k):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            i = queue.popleft()
            for j in range(k):
                if not seen[j] and sp[i, j] != 0:
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        comps.append([h.slim[i] for i in sorted(comp)])
    return comps


def decompose(h: HoffmanGraph) -> list[HoffmanGraph]:
    """Indecomposable factors, ordered by their first slim vertex in ``h.slim``."""
    return [generated_subgraph(h, comp) for comp in special_components(h)]


def is_indecomposable(h: HoffmanGraph) -> bool:
    return len(special_components(h)) <= 1


def stripped_sum(parts: Sequence[HoffmanGraph]) -> HoffmanGraph:
    """Direct sum of ``parts`` with every fat vertex shared by two parts removed.

    Computed left to right; a fat label occurring in three or more parts
    breaks the reassociation rule and is rejected.
    """
    if not parts:
        raise HoffmanError("stripped_sum needs at least one part")
    acc = parts[0]
    removed: set = set()
    for part in parts[1:]:
        triple = removed & set(part.fat)
        if triple:
            raise HoffmanError(f"fat vertices {sorted(map(repr, triple))} are shared by three or more parts")
        shared = set(acc.fat) & set(part.fat)
        acc = direct_sum(acc, part).remove_fat(shared)
        removed |= shared
    return acc


@dataclass(frozen=True)
class StrippingCheck:
    ok: bool
    violated: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def check_tree_like_stripping(parts: Sequence[HoffmanGraph]) -> StrippingCheck:
    """Test the combinatorial conditions for ``stripped_sum(parts)`` to be tree-like.

    Reports the first failing condition in the order: connectivity, tree-like
    parts, pairwise fat intersections, triple intersections, leaf condition,
    and finally that the parts are glued along a tree (``parts - 1`` shared fats).
    """
    parts = list(parts)
    owners: dict = {}
    for i, p in enumerate(parts):
        for f in p.fat:
            owners.setdefault(f, []).append(i)
    shared = {f for f, idx in owners.items() if len(idx) >= 2}

    # connectivity of the stripped graph, built without raising
    nb: dict = {}
    for i, p in enumerate(parts):
        for v in p.vertices:
            if v in shared:
                continue
            nb.setdefault(v, set()).update(w for w in p.nbrs[v] if w not in shared)
    for f in shared:
        idx = owners[f]
        for a, b in combinations(idx, 2):
            for x in parts[a].nbrs[f]:
                for y in parts[b].nbrs[f]:
                    nb.setdefault(x, set()).add(y)
                    nb.setdefault(y, set()).add(x)
    if nb:
        start = next(iter(nb))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in nb[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(nb):
            return StrippingCheck(False, "connected", "stripped graph is disconnected")
    for i, p in enumerate(parts):
        if not p.is_tree_like():
            return StrippingCheck(False, "parts_tree_like", f"part {i} is not tree-like")
    for i, j in combinations(range(len(parts)), 2):
        common = set(parts[i].fat) & set(parts[j].fat)
        if len(common) > 1:
            return StrippingCheck(False, "pairwise_fat", f"parts {i},{j} share {len(common)} fat vertices")
    for f, idx in owners.items():
        if len(idx) >= 3:
            return StrippingCheck(False, "triple_fat", f"fat {f!r} lies in parts {idx}")
    for f in shared:
        i, j = owners[f]
        if len(parts[i].nbrs[f]) != 1 and len(parts[j].nbrs[f]) != 1:
            return StrippingCheck(False, "leaf", f"shared fat {f!r} is a leaf in neither part")
    # parts joined by shared fats must form a tree, or the slims close a cycle
    if len(parts) > 1 and len(shared) != len(parts) - 1:
        return StrippingCheck(False, "acyclic", f"{len(shared)} shared fats join {len(parts)} parts")
    return StrippingCheck(True)


# --- attaching fat vertices -------------------------------------------------------

def _fresh_label(h: HoffmanGraph):
    labels = h.vertices
    if all(isinstance(v, int) for v in labels):
        return max(labels, default=-1) + 1
    k = 0
    while ("f+", k) in set(labels):
        k += 1
    return ("f+", k)


def attach_fat(h: HoffmanGraph, s: Iterable, label=None) -> HoffmanGraph:
    """Add one new fat vertex adjacent exactly to the slim set ``s``."""
    s = list(dict.fromkeys(s))
    if not s:
        raise HoffmanError("a fat vertex needs at least one slim neighbour")
    if any(not h.is_slim(x) for x in s):
        raise HoffmanError("fat vertices attach to slim vertices only")
    f = _fresh_label(h) if label is None else label
    if f in h.nbrs:
        raise HoffmanError(f"label {f!r} already in use")
    return HoffmanGraph(h.slim, h.fat + (f,), h.edges | {_pair(f, x) for x in s})


def _nonempty_subsets(k: int) -> list[tuple[int, ...]]:
    return [c for r in range(1, k + 1) for c in combinations(range(k), r)]


def attachment_keeps(sp: np.ndarray, subset: Sequence[int], mu=-3) -> bool:
    """Whether subtracting ``1_S 1_S^T`` from ``sp`` keeps ``lambda_min >= mu``."""
    m = sp.copy()
    idx = np.array(subset)
    m[np.ix_(idx, idx)] -= 1
    return cmp_lambda_min(m, mu) is not LambdaOrder.LESS


MAX_SATURATION_SLIMS = 12


def is_saturated(h: HoffmanGraph, mu=-3) -> bool:
    """No single fat vertex can be attached while keeping ``lambda_min >= mu``."""
    if not lambda_min_at_least(h, mu):
        raise HoffmanError("saturation is only defined when lambda_min >= mu")
    k = len(h.slim)
    if k > MAX_SATURATION_SLIMS:
        raise HoffmanError(f"saturation test is exponential; {k} slims exceeds {MAX_SATURATION_SLIMS}")
    sp = special_matrix(h)
    # a vertex of weight >= -mu cannot take another fat neighbour
    return not any(attachment_keeps(sp, s, mu) for s in _nonempty_subsets(k))


def is_saturated_minus3(h: HoffmanGraph) -> bool:
    return is_saturated(h, -3)


def iter_saturations_preserving_ir(h: HoffmanGraph, *, search_budget: int = 20_000,
                                   solver_budget: int = 10**6, keep_indecomposable: bool = False):
    """Yield fat, (-3)-saturated, integrally representable extensions of ``h`` by fat vertices.

    Depth-first over multisets of attachment sets (each a nonempty slim
    subset), re-running the representation solver after every attachment.
    With ``keep_indecomposable`` only indecomposable end results are yielded.
    Isomorphic results may repeat. Raises :class:`HoffmanError` when the
    budget runs out.
    """
    from .representation import Outcome, solve_reduced_integral

    if not h.slim:
        raise HoffmanError("need at least one slim vertex")
    if not is_indecomposable(h):
        raise HoffmanError("saturation expects an indecomposable Hoffman graph")
    if solve_reduced_integral(h, node_budget=solver_budget).outcome is not Outcome.FOUND:
        raise HoffmanError("input is not integrally representable of norm 3")
    subsets = _nonempty_subsets(len(h.slim))
    spent = 0

    def search(g: HoffmanGraph, start: int):
        nonlocal spent
        spent += 1
        if spent > search_budget:
            raise HoffmanError("saturation search budget exhausted")
        if g.is_fat() and is_saturated(g, -3):
            if not keep_indecomposable or is_indecomposable(g):
                yield g
            return
        sp = special_matrix(g)
        for idx in range(start, len(subsets)):
            sub = subsets[idx]
            if not attachment_keeps(sp, sub, -3):
                continue
            g2 = attach_fat(g, [g.slim[i] for i in sub])
            if solve_reduced_integral(g2, node_budget=solver_budget).outcome is not Outcome.FOUND:
                continue
            yield from search(g2, idx)

    yield from search(h, 0)


def saturate_preserving_ir(h: HoffmanGraph, **kw) -> HoffmanGraph:
    """First extension from :func:`iter_saturations_preserving_ir`; HoffmanError if none."""
    result = next(iter_saturations_preserving_ir(h, **kw), None)
    if result is None:
        raise HoffmanError("no fat, saturated, integrally representable extension exists")
    return result


def empty_hoffman() -> HoffmanGraph:
    return HoffmanGraph((), (), frozenset())
