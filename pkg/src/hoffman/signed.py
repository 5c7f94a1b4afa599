"""Edge-signed graphs, switching, and (-)-matchings of trees up to automorphism."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import Graph, _edge
from .iso import automorphisms, iter_embeddings


@dataclass(frozen=True)
class EdgeSignedGraph:
    """Vertices ``0..n-1`` with disjoint sets of (+)-edges and (-)-edges."""

    n: int
    plus: frozenset[tuple[int, int]]
    minus: frozenset[tuple[int, int]]

    def __post_init__(self):
        plus = frozenset(_edge(*e) for e in self.plus)
        minus = frozenset(_edge(*e) for e in self.minus)
        if plus & minus:
            raise ValueError("an edge cannot carry both signs")
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)
        Graph(self.n, tuple(plus | minus))  # validates endpoints and loops

    @classmethod
    def from_graph(cls, g: Graph, minus=()) -> "EdgeSignedGraph":
        minus = frozenset(_edge(*e) for e in minus)
        if not minus <= set(g.edges):
            raise ValueError("minus edges must be edges of the graph")
        return cls(g.n, frozenset(g.edges) - minus, minus)

    @property
    def underlying(self) -> Graph:
        return Graph(self.n, tuple(sorted(self.plus | self.minus)))

    def sign(self, u: int, v: int) -> int:
        e = _edge(u, v)
        if e in self.plus:
            return 1
        if e in self.minus:
            return -1
        return 0

    def minus_graph(self) -> Graph:
        return Graph(self.n, tuple(sorted(self.minus)))

    def to_json(self) -> str:
        return json.dumps({"n": self.n,
                           "plus": [list(e) for e in sorted(self.plus)],
                           "minus": [list(e) for e in sorted(self.minus)]})

    @classmethod
    def from_json(cls, text: str) -> "EdgeSignedGraph":
        d = json.loads(text)
        return cls(int(d["n"]), frozenset(map(tuple, d["plus"])), frozenset(map(tuple, d["minus"])))

    def to_dot(self, name: str = "S") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  {v} [label="{v}"];' for v in range(self.n)]
        for u, v in sorted(self.plus | self.minus):
            style = "solid" if (u, v) in self.plus else "dashed"
            lab = "+" if (u, v) in self.plus else "-"
            lines.append(f'  {u} -- {v} [style={style}, label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def signed_adjacency(s: EdgeSignedGraph) -> np.ndarray:
    b = np.zeros((s.n, s.n), dtype=np.int64)
    for u, v in s.plus:
        b[u, v] = b[v, u] = 1
    for u, v in s.minus:
        b[u, v] = b[v, u] = -1
    return b


def switch_at(s: EdgeSignedGraph, u) -> EdgeSignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``u``."""
    u = set(u)
    if any(not 0 <= x < s.n for x in u):
        raise ValueError("switching set contains unknown vertices")
    plus, minus = set(), set()
    for e in s.plus:
        (minus if (e[0] in u) != (e[1] in u) else plus).add(e)
    for e in s.minus:
        (plus if (e[0] in u) != (e[1] in u) else minus).add(e)
    return EdgeSignedGraph(s.n, frozenset(plus), frozenset(minus))


def switching_set(s1: EdgeSignedGraph, s2: EdgeSignedGraph) -> set[int] | None:
    """A vertex set ``U`` with ``switch_at(s1, U) == s2`` on the same labelled graph, or None.

    Exists iff the edgewise sign product ``s1 * s2`` is a coboundary, i.e. has
    product +1 around every cycle; found by 2-colouring a spanning forest.
    """
    if s1.n != s2.n or (s1.plus | s1.minus) != (s2.plus | s2.minus):
        return None
    g = s1.underlying
    side = [None] * s1.n
    for root in range(s1.n):
        if side[root] is not None:
            continue
        side[root] = False
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                flip = s1.sign(x, y) != s2.sign(x, y)
                want = side[x] ^ flip
                if side[y] is None:
                    side[y] = want
                    queue.append(y)
                elif side[y] != want:
                    return None
    return {v for v in range(s1.n) if side[v]}


def switching_equivalent(s1: EdgeSignedGraph, s2: EdgeSignedGraph) -> bool:
    """True iff some isomorphism of the underlying graphs followed by a switching maps s1 to s2."""
    if s1.n != s2.n or len(s1.plus | s1.minus) != len(s2.plus | s2.minus):
        return False
    g1, g2 = s1.underlying, s2.underlying
    adj1 = [set(a) for a in g1.adj]
    adj2 = [set(a) for a in g2.adj]
    for m in iter_embeddings(adj1, adj2):
        image = EdgeSignedGraph(s1.n,
                                frozenset(_edge(m[u], m[v]) for u, v in s1.plus),
                                frozenset(_edge(m[u], m[v]) for u, v in s1.minus))
        if switching_set(image, s2) is not None:
            return True
    return False


@dataclass(frozen=True)
class MinusMatchingClass:
    """An automorphism orbit of matchings; ``representative`` is the orbit's least member."""

    representative: tuple[tuple[int, int], ...]
    orbit_size: int


def _matchings(g: Graph):
    edges = list(g.edges)

    def rec(i, used, chosen):
        if i == len(edges):
            yield tuple(chosen)
            return
        yield from rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            chosen.append(edges[i])
            yield from rec(i + 1, used | {u, v}, chosen)
            chosen.pop()

    yield from rec(0, frozenset(), [])


def all_matchings(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    """Every set of pairwise non-incident edges, the empty set included."""
    return list(_matchings(g))


def enumerate_minus_matchings(g: Graph) -> list[MinusMatchingClass]:
    """Matchings of the tree ``g`` grouped into orbits of its automorphism group.

    Classes are ordered by (matching size, representative).
    """
    if not g.is_tree():
        raise ValueError("enumerate_minus_matchings expects a tree")
    group = automorphisms([set(a) for a in g.adj])

    def key(matching):
        return (len(matching), tuple(sorted(matching)))

    classes: dict[tuple, set] = {}
    for mt in _matchings(g):
        orbit = {tuple(sorted(_edge(p[u], p[v]) for u, v in mt)) for p in group}
        rep = min(orbit, key=key)
        classes.setdefault(rep, orbit)
    return [MinusMatchingClass(rep, len(orbit))
            for rep, orbit in sorted(classes.items(), key=lambda kv: key(kv[0]))]


def is_matching(edges) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


