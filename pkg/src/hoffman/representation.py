"""Integral representations of norm 3: verification, exhaustive search, lattice invariants.

A reduced representation assigns each slim vertex ``x`` an integer vector
``psi(x)`` with Gram matrix ``Sp(h) + 3I``. For norm 3 all entries are in
{0, 1, -1}, so the search below is a finite constraint problem: place the
slim vertices one at a time, each with exactly ``3 - w(x)`` nonzero entries,
matching every inner product with the vertices already placed.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

from .graph import Graph, distances_from
from .hoffman import HoffmanError, HoffmanGraph, lambda_min_cmp, special_matrix
from .linalg import LambdaOrder, exact_det


@dataclass(frozen=True)
class ReducedRep:
    """``psi``: slim vertex -> integer vector of length ``dim``."""

    dim: int
    vectors: Mapping = field(default_factory=dict)

    def __post_init__(self):
        vecs = {v: tuple(int(a) for a in vec) for v, vec in dict(self.vectors).items()}
        if any(len(vec) != self.dim for vec in vecs.values()):
            raise ValueError("every vector must have length dim")
        object.__setattr__(self, "vectors", vecs)

    def gram(self, order) -> np.ndarray:
        n = np.array([self.vectors[v] for v in order], dtype=np.int64).reshape(len(order), self.dim)
        return n @ n.T

    def to_dict(self) -> dict:
        return {"dim": self.dim, "vectors": {str(k): list(v) for k, v in self.vectors.items()}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ReducedRep":
        return cls(int(d["dim"]), {int(k): tuple(v) for k, v in d["vectors"].items()})


@dataclass(frozen=True)
class FullRep(ReducedRep):
    """``phi``: every vertex (slim and fat) -> integer vector."""


class Outcome(enum.Enum):
    FOUND = "found"
    NOT_REPRESENTABLE = "not_representable"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SolveResult:
    outcome: Outcome
    rep: ReducedRep | None = None
    nodes: int = 0
    # True when some branch was cut only because of dim_cap; a negative
    # verdict is then relative to the cap
    cap_hit: bool = False
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND


class InconclusiveError(RuntimeError):
    """The solver ran out of budget before reaching a verdict."""


# --- verification -------------------------------------------------------------

def _check_keys(expected, got, what):
    if set(expected) != set(got):
        raise ValueError(f"{what} must be indexed by exactly the {len(set(expected))} expected vertices")


def verify_reduced(h: HoffmanGraph, psi: ReducedRep, t: int = 3) -> bool:
    """Gram(psi) == Sp(h) + t I."""
    _check_keys(h.slim, psi.vectors, "reduced representation")
    if not h.slim:
        return True
    return bool(np.array_equal(psi.gram(h.slim), special_matrix(h) + t * np.eye(len(h.slim), dtype=np.int64)))


def verify_full(h: HoffmanGraph, phi: FullRep, t: int = 3) -> bool:
    _check_keys(h.vertices, phi.vectors, "representation")
    order = h.vertices
    g = phi.gram(order)
    k = len(h.slim)
    for i, x in enumerate(order):
        for j in range(i, len(order)):
            if i == j:
                want = t if i < k else 1
            else:
                want = 1 if order[j] in h.nbrs[x] else 0
            if g[i, j] != want:
                return False
    return True


def full_from_reduced(h: HoffmanGraph, psi: ReducedRep) -> FullRep:
    """Append one coordinate per fat vertex: ``phi(x) = psi(x) + sum of e_f over fat neighbours``."""
    _check_keys(h.slim, psi.vectors, "reduced representation")
    n, nf = psi.dim, len(h.fat)
    fpos = {f: n + i for i, f in enumerate(h.fat)}
    vecs = {}
    for x in h.slim:
        v = list(psi.vectors[x]) + [0] * nf
        for f in h.fat_neighbors(x):
            v[fpos[f]] = 1
        vecs[x] = tuple(v)
    for f in h.fat:
        v = [0] * (n + nf)
        v[fpos[f]] = 1
        vecs[f] = tuple(v)
    return FullRep(n + nf, vecs)


def reduced_from_full(h: HoffmanGraph, phi: FullRep) -> ReducedRep:
    """Project away the fat coordinates; ``phi`` must send fats to distinct ``+e_j``."""
    _check_keys(h.vertices, phi.vectors, "representation")
    fcoord = {}
    for f in h.fat:
        vec = phi.vectors[f]
        nz = [i for i, a in enumerate(vec) if a]
        if len(nz) != 1 or vec[nz[0]] != 1:
            raise HoffmanError(f"fat vertex {f!r} is not mapped to a positive unit vector")
        fcoord[f] = nz[0]
    if len(set(fcoord.values())) != len(fcoord):
        raise HoffmanError("fat vertices must use distinct coordinates")
    keep = [i for i in range(phi.dim) if i not in set(fcoord.values())]
    vecs = {}
    for x in h.slim:
        vec = phi.vectors[x]
        fn = h.fat_neighbors(x)
        for f, c in fcoord.items():
            if vec[c] != (1 if f in fn else 0):
                raise HoffmanError(f"slim {x!r} is not in normal form at the coordinate of {f!r}")
        vecs[x] = tuple(vec[i] for i in keep)
    return ReducedRep(len(keep), vecs)


# --- search -------------------------------------------------------------------

class _Budget(Exception):
    pass


def search_order(h: HoffmanGraph) -> list[int]:
    """Slim positions in breadth-first order on the special graph.

    Each component starts from a maximum-weight vertex; components are taken
    in order of their starting vertex.
    """
    sp = special_matrix(h)
    k = len(h.slim)
    weight = [-int(sp[i, i]) for i in range(k)]
    seen = [False] * k
    order = []
    for s in sorted(range(k), key=lambda i: (-weight[i], i)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            i = queue.popleft()
            order.append(i)
            nbrs = [j for j in range(k) if j != i and sp[i, j] != 0 and not seen[j]]
            for j in sorted(nbrs, key=lambda j: (-weight[j], j)):
                seen[j] = True
                queue.append(j)
    return order


class _Search:
    def __init__(self, gram: np.ndarray, order: list[int], dim_cap: int, node_budget: int):
        self.order = order
        k = len(order)
        self.norm = [int(gram[v, v]) for v in order]
        self.target = [[int(gram[order[p], order[q]]) for q in range(p)] for p in range(k)]
        self.dim_cap = dim_cap
        self.node_budget = node_budget
        self.nodes = 0
        self.cap_hit = False
        self.vectors: list[dict[int, int]] = []
        self.used = 0

    def old_parts(self, p: int) -> list[tuple[tuple[int, int], ...]]:
        """All sign patterns on already-used coordinates meeting every target exactly."""
        s = self.norm[p]
        target = self.target[p]
        vecs = self.vectors
        ip = [0] * p
        chosen: dict[int, int] = {}
        seen = set()
        out = []

        def feasible(rem):
            for q in range(p):
                gap = target[q] - ip[q]
                if gap:
                    if abs(gap) > rem:
                        return False
                    free = sum(1 for c in vecs[q] if c not in chosen)
                    if abs(gap) > free:
                        return False
            return True

        def place(c, sign, delta):
            for q in range(p):
                a = vecs[q].get(c)
                if a:
                    ip[q] += delta * sign * a

        def rec():
            key = frozenset(chosen.items())
            if key in seen:
                return
            seen.add(key)
            rem = s - len(chosen)
            if not feasible(rem):
                return
            unmet = next((q for q in range(p) if ip[q] != target[q]), None)
            if unmet is None:
                out.append(tuple(sorted(chosen.items())))
                pool = [c for c in range(self.used) if c not in chosen]
            else:
                pool = [c for c in vecs[unmet] if c not in chosen]
            if rem == 0:
                return
            for c in sorted(pool):
                for sign in (1, -1):
                    chosen[c] = sign
                    place(c, sign, 1)
                    rec()
                    place(c, sign, -1)
                    del chosen[c]

        rec()
        # fewer fresh coordinates first, then lexicographic for determinism
        out.sort(key=lambda pat: (-len(pat), pat))
        return out

    def solutions(self) -> Iterator[list[dict[int, int]]]:
        yield from self._dfs(0)

    def _dfs(self, p: int):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _Budget
        if p == len(self.order):
            yield [dict(v) for v in self.vectors]
            return
        s = self.norm[p]
        for pat in self.old_parts(p):
            fresh = s - len(pat)
            if self.used + fresh > self.dim_cap:
                self.cap_hit = True
                continue
            vec = dict(pat)
            for i in range(fresh):
                vec[self.used + i] = 1
            self.vectors.append(vec)
            self.used += fresh
            yield from self._dfs(p + 1)
            self.used -= fresh
            self.vectors.pop()


def _prepare(h: HoffmanGraph, t: int):
    if t != 3:
        raise ValueError("only norm 3 is supported")
    k = len(h.slim)
    sp = special_matrix(h)
    gram = sp + t * np.eye(k, dtype=np.int64)
    return k, gram


def _to_rep(h: HoffmanGraph, order, vectors, dim) -> ReducedRep:
    vecs = {}
    for p, v in enumerate(order):
        row = [0] * dim
        for c, a in vectors[p].items():
            row[c] = a
        vecs[h.slim[v]] = tuple(row)
    return ReducedRep(dim, vecs)


def solve_reduced_integral(h: HoffmanGraph, t: int = 3, dim_cap: int | None = None,
                           node_budget: int = 10**7) -> SolveResult:
    """Search for an integral reduced representation of norm 3.

    Complete within ``dim_cap`` (default ``3 * |V_s|``): ``NOT_REPRESENTABLE``
    is returned only after exhausting the search, or when the exact eigenvalue
    test already shows ``lambda_min(h) < -3``. Coordinates are activated in
    increasing order and every fresh coordinate enters with sign +1.
    """
    k, gram = _prepare(h, t)
    if dim_cap is None:
        dim_cap = 3 * k
    if k == 0:
        return SolveResult(Outcome.FOUND, ReducedRep(0, {}), 0)
    if any(gram[i, i] < 0 for i in range(k)):
        return SolveResult(Outcome.NOT_REPRESENTABLE, reason="slim vertex with more than 3 fat neighbours")
    if lambda_min_cmp(h, -t) is LambdaOrder.LESS:
        return SolveResult(Outcome.NOT_REPRESENTABLE, reason="lambda_min < -3")
    order = search_order(h)
    search = _Search(gram, order, dim_cap, node_budget)
    try:
        for sol in search.solutions():
            dim = max((c + 1 for v in sol for c in v), default=0)
            rep = _to_rep(h, order, sol, dim)
            return SolveResult(Outcome.FOUND, rep, search.nodes, search.cap_hit)
    except _Budget:
        return SolveResult(Outcome.BUDGET_EXCEEDED, None, search.nodes, search.cap_hit,
                           reason=f"node budget {node_budget} exhausted")
    return SolveResult(Outcome.NOT_REPRESENTABLE, None, search.nodes, search.cap_hit,
                       reason="search exhausted" + (" (relative to dim_cap)" if search.cap_hit else ""))


def iter_reduced_integral(h: HoffmanGraph, t: int = 3, dim_cap: int | None = None,
                          node_budget: int = 10**7) -> Iterator[ReducedRep]:
    """Every representation the solver's canonical form admits (raises on budget)."""
    k, gram = _prepare(h, t)
    if dim_cap is None:
        dim_cap = 3 * k
    if k == 0:
        yield ReducedRep(0, {})
        return
    if any(gram[i, i] < 0 for i in range(k)) or lambda_min_cmp(h, -t) is LambdaOrder.LESS:
        return
    order = search_order(h)
    search = _Search(gram, order, dim_cap, node_budget)
    try:
        for sol in search.solutions():
            dim = max((c + 1 for v in sol for c in v), default=0)
            yield _to_rep(h, order, sol, dim)
    except _Budget:
        raise InconclusiveError(f"node budget {node_budget} exhausted") from None


def is_integrally_representable(h: HoffmanGraph, t: int = 3, *, dim_cap: int | None = None,
                                node_budget: int = 10**7) -> bool:
    """True iff the solver finds a representation; raises :class:`InconclusiveError` on budget."""
    res = solve_reduced_integral(h, t, dim_cap, node_budget)
    if res.outcome is Outcome.BUDGET_EXCEEDED:
        raise InconclusiveError(res.reason)
    return res.found


def graph_is_integrally_representable(g: Graph, **kw) -> bool:
    """Plain graphs are Hoffman graphs without fat vertices."""
    return is_integrally_representable(HoffmanGraph.build(range(g.n), (), g.edges), **kw)


# --- lattices -----------------------------------------------------------------

def integer_row_basis(rows) -> list[list[int]]:
    """Row echelon basis of the lattice spanned by integer ``rows`` (gcd elimination)."""
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    basis = []
    for col in range(ncols):
        while True:
            nz = [r for r in a if r[col] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is not piv:
                    q = r[col] // piv[col]
                    for j in range(col, ncols):
                        r[j] -= q * piv[j]
            a = [r for r in a if any(r)]
        nz = [r for r in a if r[col] != 0]
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                piv[:] = [-x for x in piv]
            basis.append(piv)
            a = [r for r in a if r is not piv]
    return basis


@dataclass(frozen=True)
class LatticeInvariants:
    rank: int
    gram_det: int


def lattice_invariants(rep: ReducedRep) -> LatticeInvariants:
    """Rank and basis Gram determinant of the lattice spanned by the vectors of ``rep``."""
    rows = [list(v) for v in rep.vectors.values()]
    basis = integer_row_basis(rows) if rows else []
    if not basis:
        return LatticeInvariants(0, 1)
    b = np.array(basis, dtype=object)
    g = (b @ b.T).tolist()
    return LatticeInvariants(len(basis), exact_det(g))


def reps_equivalent(r1: ReducedRep, r2: ReducedRep) -> bool:
    """Equal up to a signed permutation of coordinates (zero coordinates ignored)."""
    if set(r1.vectors) != set(r2.vectors):
        return False
    order = list(r1.vectors)

    def rows(r):
        out = []
        for c in range(r.dim):
            col = tuple(r.vectors[v][c] for v in order)
            if any(col):
                first = next(a for a in col if a)
                out.append(col if first > 0 else tuple(-a for a in col))
        return sorted(out)

    return rows(r1) == rows(r2)


# --- structural checks on representations of saturated graphs ----------------------

def extend_structure_violations(h: HoffmanGraph, psi: ReducedRep) -> list[str]:
    """Check the coordinate pairing of a fat, (-3)-saturated representation.

    Every used coordinate must carry a +1 and a -1, and any two slims with
    opposite nonzero entries in a coordinate must be within distance 2 in
    the special (-)-graph. Returns human-readable violations (empty if none).
    """
    from .hoffman import special_minus_graph

    order = list(h.slim)
    minus = special_minus_graph(h)
    dist = [distances_from(minus, i) for i in range(len(order))]
    problems = []
    for c in range(psi.dim):
        pos = [i for i, x in enumerate(order) if psi.vectors[x][c] == 1]
        neg = [i for i, x in enumerate(order) if psi.vectors[x][c] == -1]
        if not pos and not neg:
            continue
        if not pos or not neg:
            problems.append(f"coordinate {c} lacks a {'+1' if not pos else '-1'} entry")
            continue
        for i in pos:
            for j in neg:
                d = dist[i][j]
                if d is None or d > 2:
                    problems.append(f"coordinate {c}: {order[i]!r} and {order[j]!r} at distance {d}")
    return problems
