"""Free tree enumeration and canonical encodings of (vertex-coloured) trees.

Enumeration follows the Wright-Richmond-Odlyzko-McKay scheme: every free tree
is represented once by the level sequence of its canonical centre-rooted form,
and successors are produced in constant amortised time.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from .graph import Graph


def _layout_to_graph(layout: Sequence[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, level in enumerate(layout):
        while len(stack) > level:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph(len(layout), tuple(edges))


def _next_rooted_tree(pred: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(pred) - 1
        while pred[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while pred[q] != pred[p] - 1:
        q -= 1
    out = list(pred)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split_tree(layout: list[int]) -> tuple[list[int], list[int]]:
    # left: the first subtree of the root; rest: root plus remaining subtrees
    one_found = False
    m = len(layout)
    for i, level in enumerate(layout):
        if level == 1:
            if one_found:
                m = i
                break
            one_found = True
    left = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + [layout[i] for i in range(m, len(layout))]
    return left, rest


def _next_tree(candidate: list[int]) -> list[int] | None:
    left, rest = _split_tree(candidate)
    left_height, rest_height = max(left), max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted_tree(candidate, p)
    if nxt is None:
        return None
    if candidate[p] > 2:
        new_left, _ = _split_tree(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    """Yield every unlabelled tree on ``n`` vertices exactly once, deterministically."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        yield Graph(n, ((0, 1),) if n == 2 else ())
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_tree(layout)
        if layout is not None:
            yield _layout_to_graph(layout)
            layout = _next_rooted_tree(layout)


def tree_centers(adj: Sequence[Sequence[int]]) -> list[int]:
    """Centre vertices (one or two) by repeated leaf stripping."""
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_code(adj, root: int, colors) -> str:
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    codes: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(codes.pop(w) for w in adj[u] if w != parent[u])
        tag = "" if colors is None else str(colors[u])
        codes[u] = "(" + tag + "".join(kids) + ")"
    return codes[root]


def is_tree_adj(adj: Sequence[Sequence[int]]) -> bool:
    n = len(adj)
    if n == 0:
        return False
    if sum(len(a) for a in adj) != 2 * (n - 1):
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def tree_code(adj: Sequence[Sequence[int]], colors: Sequence | None = None) -> bytes:
    """Centre-rooted AHU code of a tree given as adjacency lists.

    With ``colors`` the code is invariant only under colour-preserving
    isomorphisms; colours must have stable ``str`` forms without parentheses.
    """
    if not is_tree_adj(adj):
        raise ValueError("input is not a tree")
    codes = [_rooted_code(adj, c, colors) for c in tree_centers(adj)]
    return min(codes).encode("ascii")


def canonical_code(t: Graph) -> bytes:
    """Isomorphism invariant of a tree: equal codes iff isomorphic."""
    return tree_code([sorted(a) for a in t.adj])


def from_canonical_code(code: bytes) -> Graph:
    """Rebuild a tree from an uncoloured code produced by :func:`canonical_code`."""
    edges = []
    stack: list[int] = []
    n = 0
    for ch in code.decode("ascii"):
        if ch == "(":
            if stack:
                edges.append((stack[-1], n))
            stack.append(n)
            n += 1
        elif ch == ")":
            stack.pop()
        else:
            raise ValueError("coloured codes cannot be decoded")
    return Graph(n, tuple(edges))


def prufer_to_tree(seq: Sequence[int], n: int) -> Graph:
    """Labelled tree from a Prufer sequence of length ``n - 2``."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (i for i in range(n) if degree[i] == 1)
    edges.append((u, w))
    return Graph(n, tuple(edges))
