"""Randomised structural checks: eigenvalue sandwich, sign similarity, lattices, saturation.

Every generator takes a ``random.Random`` so runs are reproducible from a seed.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .catalog import make_c, make_f_prime_3, make_fat_star, make_h_t, make_psi_c
from .graph import Graph, cycle_graph
from .hoffman import (HoffmanError, HoffmanGraph, check_tree_like_stripping, is_indecomposable,
                      is_saturated, lambda_min_cmp3,
                      special_matrix, special_minus_graph, stripped_sum)
from .iso import find_isomorphism
from .linalg import LambdaOrder, lambda_min_algebraic
from .representation import (ReducedRep, extend_structure_violations, full_from_reduced,
                             lattice_invariants, solve_reduced_integral, verify_reduced)
from .smith import smith_graph


# --- generators -----------------------------------------------------------------

def random_tree_like(rng: random.Random, max_slim: int = 10, *, max_fat: int | None = None,
                     max_tries: int = 1000) -> HoffmanGraph:
    """A random tree-like Hoffman graph with lambda_min >= -3.

    Vertices arrive one at a time, each joined to one earlier vertex: a fat
    one to a slim, a slim one to anything. Draws with lambda_min < -3 are
    rejected.
    """
    for _ in range(max_tries):
        k = rng.randint(1, max_slim)
        nf = rng.randint(0, max_fat if max_fat is not None else k + 2)
        kinds = ["s"] * (k - 1) + ["f"] * nf
        rng.shuffle(kinds)
        slim, fat, edges = [0], [], []
        for v, kind in enumerate(kinds, start=1):
            if kind == "f":
                fat.append(v)
                edges.append((v, rng.choice(slim)))
            else:
                edges.append((v, rng.randrange(v)))
                slim.append(v)
        h = HoffmanGraph.build(slim, fat, edges)
        if any(h.weight(x) > 3 for x in h.slim):
            continue
        if lambda_min_cmp3(h) is not LambdaOrder.LESS:
            return h
    raise RuntimeError("no tree-like graph with lambda_min >= -3 drawn")


def catalog_pool() -> list[HoffmanGraph]:
    """Small tree-like catalog members used as stripped-sum parts."""
    pool = [make_h_t(t) for t in (1, 2, 3)]
    pool += [make_fat_star(k) for k in (2, 3)]
    pool += [make_c(m) for m in (2, 3, 4, 5)]
    pool.append(make_f_prime_3())
    return pool


def random_stripped_sum(rng: random.Random, pool: list[HoffmanGraph] | None = None,
                        max_parts: int = 5) -> tuple[list[HoffmanGraph], HoffmanGraph]:
    """Glue random pool members one at a time at a single open fat each.

    Labels are ``(part index, original label)``; a glued fat takes the label
    it has in the part it joins. Returns the parts and their stripped sum.
    """
    pool = pool or catalog_pool()
    r = rng.randint(1, max_parts)
    first = rng.choice(pool)
    parts = [first.relabel(lambda v: (0, v))]
    open_fats = {f: len(parts[0].nbrs[f]) for f in parts[0].fat}
    for i in range(1, r):
        if not open_fats:
            break
        for _ in range(50):
            f = rng.choice(sorted(open_fats, key=repr))
            m = rng.choice(pool)
            g = rng.choice(m.fat)
            if open_fats[f] == 1 or len(m.nbrs[g]) == 1:
                break
        else:
            break
        p = m.relabel(lambda v, i=i, g=g, f=f: f if v == g else (i, v))
        del open_fats[f]
        open_fats.update({x: len(p.nbrs[x]) for x in p.fat if x != f})
        parts.append(p)
    return parts, stripped_sum(parts)


# --- individual checks -------------------------------------------------------------

def sign_similarity(h: HoffmanGraph) -> list[int] | None:
    """A +-1 vector ``d`` with ``diag(d) Sp diag(d) <= 0`` entrywise, or None.

    Found by propagating signs over a BFS forest of the special graph, then
    checked on every entry.
    """
    sp = special_matrix(h)
    k = len(h.slim)
    d = [0] * k
    for root in range(k):
        if d[root]:
            continue
        d[root] = 1
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(k):
                if j != i and sp[i, j] != 0 and not d[j]:
                    d[j] = -d[i] if sp[i, j] > 0 else d[i]
                    queue.append(j)
    ok = all(d[i] * d[j] * sp[i, j] <= 0 for i in range(k) for j in range(k))
    return d if ok else None


@dataclass(frozen=True)
class SandwichCheck:
    ok: bool
    detail: str = ""


def check_sandwich(parts: list[HoffmanGraph], hs: HoffmanGraph) -> SandwichCheck:
    """min over parts <= lambda_min(hs) <= max over parts, and -3 exactly iff all parts are."""
    vals = [lambda_min_algebraic(special_matrix(p)) for p in parts]
    lam = lambda_min_algebraic(special_matrix(hs))
    lo, hi = min(vals), max(vals)
    if not bool(lo <= lam) or not bool(lam <= hi):
        return SandwichCheck(False, f"{lam} outside [{lo}, {hi}]")
    at3 = lambda_min_cmp3(hs) is LambdaOrder.EQUAL
    all3 = all(lambda_min_cmp3(p) is LambdaOrder.EQUAL for p in parts)
    if at3 != all3:
        return SandwichCheck(False, f"lambda_min(hs) = -3 is {at3} but all parts at -3 is {all3}")
    return SandwichCheck(True)


def lattice_law(h: HoffmanGraph, psi: ReducedRep) -> bool:
    """Full lattice = reduced lattice + one unit coordinate per fat vertex."""
    phi = full_from_reduced(h, psi)
    red, full = lattice_invariants(psi), lattice_invariants(phi)
    return full.rank == red.rank + len(h.fat) and full.gram_det == red.gram_det


def minus_graph_kind(g: Graph) -> str | None:
    """Name the shape of a special (-)-graph on m vertices: A, D, A~ (m-cycle), D~, or None."""
    m = g.n
    candidates = [("A", smith_graph("A", m))]
    if m >= 4:
        candidates.append(("D", smith_graph("D", m)))
    if m >= 3:
        candidates.append(("A~", cycle_graph(m)))
    if m >= 5:
        candidates.append(("D~", smith_graph("D~", m - 1)))
    adj = [set(a) for a in g.adj]
    for name, c in candidates:
        if len(c.edges) == len(g.edges) and find_isomorphism(adj, [set(a) for a in c.adj]) is not None:
            return name
    return None


def saturated_structure_problems(h: HoffmanGraph, psi: ReducedRep | None = None) -> list[str]:
    """Violations of the saturated-case structure for a fat, saturated, indecomposable IR graph."""
    if len(h.slim) < 2:
        return []
    problems = []
    if not h.is_fat() or not is_saturated(h) or not is_indecomposable(h):
        raise HoffmanError("expected a fat, (-3)-saturated, indecomposable Hoffman graph")
    if psi is None:
        psi = solve_reduced_integral(h).rep
    if psi is None or not verify_reduced(h, psi):
        raise HoffmanError("expected an integrally representable Hoffman graph")
    if minus_graph_kind(special_minus_graph(h)) is None:
        problems.append("special (-)-graph is not A_m, D_m, an m-cycle or D~_{m-1}")
    problems += extend_structure_violations(h, psi)
    return problems


# --- suite ---------------------------------------------------------------------------

@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures


def sandwich_suite(rng: random.Random, count: int = 200) -> PropertyResult:
    res = PropertyResult("eigenvalue-sandwich")
    while res.checked < count:
        parts, hs = random_stripped_sum(rng)
        if not check_tree_like_stripping(parts) or not hs.is_tree_like():
            res.failures.append("generator produced an invalid stripped sum")
            res.checked += 1
            continue
        chk = check_sandwich(parts, hs)
        res.checked += 1
        if not chk.ok:
            res.failures.append(chk.detail)
    return res


def similarity_suite(rng: random.Random, count: int = 200, max_slim: int = 10) -> PropertyResult:
    res = PropertyResult("multiplicity-and-sign-similarity")
    for _ in range(count):
        h = random_tree_like(rng, max_slim)
        res.checked += 1
        d = sign_similarity(h)
        if d is None:
            res.failures.append(f"no sign similarity for {h.to_json()}")
            continue
        mult = lambda_min_multiplicity(h)
        if mult != 1:
            res.failures.append(f"multiplicity {mult} for {h.to_json()}")
    return res


def lambda_min_multiplicity(h: HoffmanGraph) -> int:
    """Exponent of the minimal polynomial of lambda_min in the characteristic polynomial."""
    import sympy

    x = sympy.Symbol("x")
    lam = lambda_min_algebraic(special_matrix(h))
    char = sympy.Poly(sympy.Matrix(special_matrix(h).tolist()).charpoly(x).as_expr(), x)
    minpoly = sympy.Poly(sympy.minimal_polynomial(lam, x), x)
    mult = 0
    while True:
        q, r = sympy.div(char, minpoly)
        if not r.is_zero:
            return mult
        char, mult = q, mult + 1


def lattice_suite() -> PropertyResult:
    res = PropertyResult("lattice-law")
    for m in range(2, 13):
        res.checked += 1
        if not lattice_law(make_c(m), make_psi_c(m)):
            res.failures.append(f"c_{m}")
    for h in (make_h_t(1), make_h_t(2), make_h_t(3), make_fat_star(2), make_fat_star(3),
              make_f_prime_3()):
        psi = solve_reduced_integral(h).rep
        res.checked += 1
        if psi is None or not lattice_law(h, psi):
            res.failures.append(h.to_json())
    return res


def saturated_seeds(max_slim: int = 4, max_m: int = 8) -> list[HoffmanGraph]:
    """Seeds whose saturations are indecomposable: small graphs meeting the step-(ii) condition, and c_m."""
    from .classify import enumerate_small_tree_like

    seeds = [h for h in enumerate_small_tree_like(max_slim).step2 if len(h.slim) >= 2]
    seeds += [make_c(m) for m in range(max_slim + 1, max_m + 1)]
    return seeds


def saturated_instances(per_seed: int = 6, **kw) -> list[HoffmanGraph]:
    """Up to ``per_seed`` pairwise non-isomorphic indecomposable saturations of every seed."""
    from .hoffman import hoffman_isomorphic, iter_saturations_preserving_ir

    out = []
    for h in saturated_seeds(**kw):
        mine: list[HoffmanGraph] = []
        for s in iter_saturations_preserving_ir(h, keep_indecomposable=True):
            if not any(hoffman_isomorphic(s, t) for t in mine):
                mine.append(s)
            if len(mine) >= per_seed:
                break
        out += mine
    return out


def saturated_suite(per_seed: int = 6) -> PropertyResult:
    res = PropertyResult("saturated-structure")
    for s in saturated_instances(per_seed):
        res.checked += 1
        probs = saturated_structure_problems(s)
        if probs:
            res.failures.append((s.to_json(), probs))
    return res


def run_property_suite(seed: int = 0, count: int = 200) -> list[PropertyResult]:
    rng = random.Random(seed)
    return [sandwich_suite(rng, count), similarity_suite(rng, count), lattice_suite(),
            saturated_suite()]
