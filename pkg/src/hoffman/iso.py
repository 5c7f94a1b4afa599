"""Backtracking isomorphism and induced-embedding search for small coloured graphs.

Adjacency is passed as a list of neighbour sets over ``0..n-1``. Targets in
this package have at most a couple of dozen vertices, so a plain search with
colour/degree filtering and a connectivity-first vertex order is enough.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence


def _search_order(adj: Sequence[set]) -> list[int]:
    # BFS from highest-degree vertex of each component: each new vertex has
    # an already-placed neighbour whenever possible, which prunes early
    n = len(adj)
    seen = [False] * n
    order = []
    for s in sorted(range(n), key=lambda v: -len(adj[v])):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(adj[u], key=lambda v: -len(adj[v])):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def iter_embeddings(adj1: Sequence[set], adj2: Sequence[set],
                    color1: Sequence | None = None, color2: Sequence | None = None,
                    *, bijective: bool = True) -> Iterator[list[int]]:
    """Yield maps ``m`` (as lists, ``m[v1] = v2``) from graph 1 into graph 2.

    Each map is injective, colour preserving, and preserves both adjacency
    and non-adjacency, i.e. graph 1 is realised as an *induced* subgraph of
    graph 2. With ``bijective=True`` only isomorphisms are produced.
    """
    n1, n2 = len(adj1), len(adj2)
    if n1 > n2 or (bijective and n1 != n2):
        return
    c1 = color1 if color1 is not None else [0] * n1
    c2 = color2 if color2 is not None else [0] * n2
    if bijective:
        if sorted(map(len, adj1)) != sorted(map(len, adj2)):
            return
        if sorted(map(repr, c1)) != sorted(map(repr, c2)):
            return
    order = _search_order(adj1)
    mapping = [-1] * n1
    used = [False] * n2

    def candidates(v):
        placed_nb = [mapping[w] for w in adj1[v] if mapping[w] >= 0]
        pool = adj2[placed_nb[0]] if placed_nb else range(n2)
        for x in pool:
            if used[x] or c2[x] != c1[v]:
                continue
            if bijective and len(adj2[x]) != len(adj1[v]):
                continue
            if not bijective and len(adj2[x]) < len(adj1[v]):
                continue
            yield x

    def consistent(v, x):
        for w in range(n1):
            y = mapping[w]
            if y < 0:
                continue
            if (w in adj1[v]) != (y in adj2[x]):
                return False
        return True

    def rec(i):
        if i == n1:
            yield list(mapping)
            return
        v = order[i]
        for x in candidates(v):
            if consistent(v, x):
                mapping[v] = x
                used[x] = True
                yield from rec(i + 1)
                mapping[v] = -1
                used[x] = False

    yield from rec(0)


def find_isomorphism(adj1, adj2, color1=None, color2=None) -> list[int] | None:
    return next(iter_embeddings(adj1, adj2, color1, color2), None)


def is_induced_subgraph(adj1, adj2, color1=None, color2=None) -> bool:
    return next(iter_embeddings(adj1, adj2, color1, color2, bijective=False), None) is not None


def automorphisms(adj: Sequence[set], color: Sequence | None = None) -> list[list[int]]:
    return list(iter_embeddings(adj, adj, color, color))
