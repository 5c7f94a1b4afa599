"""Smith graphs (connected graphs of spectral radius exactly 2) and the finite A/D types."""

from __future__ import annotations

from .graph import Graph, cycle_graph, path_graph, spider

KINDS = ("A", "D", "A~", "D~", "E6~", "E7~", "E8~")

_ALIASES = {
    "a": "A", "d": "D",
    "a~": "A~", "atilde": "A~", "d~": "D~", "dtilde": "D~",
    "e6": "E6~", "e6~": "E6~", "e7": "E7~", "e7~": "E7~", "e8": "E8~", "e8~": "E8~",
}


def _kind(kind: str) -> str:
    k = _ALIASES.get(kind.lower())
    if k is None:
        raise ValueError(f"unknown Smith/Dynkin kind {kind!r}; expected one of {KINDS}")
    return k


def smith_graph(kind: str, m: int | None = None) -> Graph:
    """Return the named Dynkin or extended Dynkin graph.

    ``A~_m`` is the cycle on ``m+1`` vertices, ``D~_m`` has ``m+1`` vertices,
    ``E6~``/``E7~``/``E8~`` are the spiders with legs (2,2,2), (1,3,3), (1,2,5).
    ``A_m`` and ``D_m`` are the finite types on ``m`` vertices.
    """
    k = _kind(kind)
    if k.startswith("E"):
        if m is not None:
            raise ValueError(f"{k} takes no parameter")
        return {"E6~": spider(2, 2, 2), "E7~": spider(1, 3, 3), "E8~": spider(1, 2, 5)}[k]
    if m is None:
        raise ValueError(f"{k} needs a parameter")
    if k == "A":
        if m < 1:
            raise ValueError("A_m needs m >= 1")
        return path_graph(m)
    if k == "D":
        if m < 4:
            raise ValueError("D_m needs m >= 4")
        # path 0..m-2 plus a leaf on vertex 1
        return Graph(m, tuple((i, i + 1) for i in range(m - 2)) + ((1, m - 1),))
    if k == "A~":
        if m < 2:
            raise ValueError("A~_m needs m >= 2")
        return cycle_graph(m + 1)
    if m < 4:
        raise ValueError("D~_m needs m >= 4")
    # path 0..m-2 with extra leaves on vertex 1 and vertex m-3
    return Graph(m + 1, tuple((i, i + 1) for i in range(m - 2)) + ((1, m - 1), (m - 3, m)))
