"""The nine acceptance criteria, each reporting one PASS/FAIL line.

Criterion 4 has a size-bounded embedding part that is not attainable (see
the README); that part is an expected failure and still prints FAIL.
Set ``HOFFMAN_EXTENDED=1`` for the non-gating n_max = 12 cross-check.
"""

import os
import random
import time

import pytest

from hoffman.catalog import family_F, make_c, make_f_prime_3, make_fat_star, make_h_t, make_psi_c
from hoffman.classify import enumerate_fat_3_seedlings, enumerate_small_tree_like, verify_main_theorem
from hoffman.graph import Graph, adjacency_matrix, connected_components
from hoffman.hoffman import hoffman_isomorphic, lambda_min_cmp3, multiplicity_of
from hoffman.linalg import LambdaOrder, cmp_lambda_max
from hoffman.properties import (lattice_law, saturated_instances, saturated_structure_problems,
                                similarity_suite, sandwich_suite)
from hoffman.representation import Outcome, solve_reduced_integral, verify_reduced
from hoffman.smith import smith_graph

EQ = LambdaOrder.EQUAL


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, seconds):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  criterion {number}: {detail} [{seconds:.1f}s]")
    return emit


def test_criterion_1_c_m_family(report):
    t0 = time.time()
    bad = []
    for m in range(2, 41):
        c = make_c(m)
        if lambda_min_cmp3(c) is not EQ or multiplicity_of(c, -3) != 1 or not verify_reduced(c, make_psi_c(m)):
            bad.append(m)
    dt = time.time() - t0
    ok = not bad and dt < 10
    report(1, ok, f"c_2..c_40 lambda_min = -3 (mult 1), psi verifies; bad={bad}", dt)
    assert ok


def test_criterion_2_fat_3_seedlings(report):
    t0 = time.time()
    counts, problems = {}, []
    for base in ("e6", "e7", "e8"):
        seeds = enumerate_fat_3_seedlings(base)
        counts[base] = len(seeds)
        for i, h in enumerate(seeds):
            if lambda_min_cmp3(h) is not EQ:
                problems.append((base, i, "lambda"))
            res = solve_reduced_integral(h)
            if res.outcome is not Outcome.NOT_REPRESENTABLE or res.cap_hit:
                problems.append((base, i, res.outcome.value))
            if any(hoffman_isomorphic(h, seeds[j]) for j in range(i)):
                problems.append((base, i, "duplicate"))
    dt = time.time() - t0
    ok = counts == {"e6": 7, "e7": 18, "e8": 50} and not problems and dt < 60
    report(2, ok, f"seedling counts {counts}, problems={problems[:3]}", dt)
    assert ok


def _deletions(g: Graph):
    """Maximal proper connected subgraphs: components after one vertex or one edge is removed."""
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        sub, _ = g.induced(keep)
        for comp in connected_components(sub):
            yield sub.induced(comp)[0]
    for e in g.edges:
        rest = Graph(g.n, tuple(x for x in g.edges if x != e))
        if len(connected_components(rest)) == 1:
            yield rest


def _random_proper_subgraph(g: Graph, rng) -> Graph:
    while True:
        verts = [v for v in range(g.n) if rng.random() < 0.8]
        if not verts:
            continue
        sub, _ = g.induced(verts)
        edges = tuple(e for e in sub.edges if rng.random() < 0.85)
        sub = Graph(sub.n, edges)
        comps = connected_components(sub)
        piece = max(comps, key=len)
        h = sub.induced(piece)[0]
        if h.n < g.n or len(h.edges) < len(g.edges):
            return h


def test_criterion_3_smith_list(report):
    t0 = time.time()
    smith = [smith_graph("A~", m) for m in range(2, 31)]
    smith += [smith_graph("D~", m) for m in range(4, 31)]
    smith += [smith_graph(k) for k in ("E6~", "E7~", "E8~")]
    bad_top, bad_sub = 0, 0
    for g in smith:
        if cmp_lambda_max(adjacency_matrix(g), 2) is not EQ:
            bad_top += 1
        # Perron-Frobenius: every proper connected subgraph lies in one of these
        for sub in _deletions(g):
            if cmp_lambda_max(adjacency_matrix(sub), 2) is not LambdaOrder.LESS:
                bad_sub += 1
    rng = random.Random(0)
    spot = 0
    for _ in range(100):
        g = rng.choice(smith)
        sub = _random_proper_subgraph(g, rng)
        if cmp_lambda_max(adjacency_matrix(sub), 2) is not LambdaOrder.LESS:
            spot += 1
    dt = time.time() - t0
    ok = bad_top == bad_sub == spot == 0 and dt < 30
    report(3, ok, f"{len(smith)} Smith graphs at exactly 2; failures top={bad_top} "
                  f"deletions={bad_sub} random={spot}", dt)
    assert ok


@pytest.fixture(scope="module")
def main_report():
    t0 = time.time()
    rep = verify_main_theorem(10)
    return rep, time.time() - t0


def test_criterion_4_set_equality(main_report):
    rep, _ = main_report
    assert rep.equality and not rep.inconclusive
    assert rep.ok  # every tree with lambda_min > -3 also has an explicit completion


@pytest.mark.xfail(strict=True, reason="no spectral-radius-3 IR tree on <= 16 vertices contains P_6")
def test_criterion_4_slack(main_report, report):
    rep, dt = main_report
    s = rep.summary()
    ok = rep.equality and rep.within_slack
    report(4, ok, f"equality={rep.equality} ({s['census_minus3']} = {s['constructed']} trees); "
                  f"completions {s['completed']}/{s['greater_trees']} (largest {s['largest_completion']}); "
                  f"within slack {rep.slack}: {s['embedded_within_slack']}/{s['greater_trees']}", dt)
    assert ok


@pytest.mark.skipif(os.environ.get("HOFFMAN_EXTENDED") != "1", reason="extended run, set HOFFMAN_EXTENDED=1")
def test_criterion_4_extended_n12():
    rep = verify_main_theorem(12, check_completions=False)
    assert rep.equality


def test_criterion_5_sandwich(report):
    t0 = time.time()
    res = sandwich_suite(random.Random(0), 200)
    ok = res.ok and res.checked >= 200
    report(5, ok, f"eigenvalue sandwich on {res.checked} stripped sums, failures={len(res.failures)}",
           time.time() - t0)
    assert ok


def test_criterion_6_similarity(report):
    t0 = time.time()
    res = similarity_suite(random.Random(0), 200, max_slim=10)
    ok = res.ok and res.checked >= 200
    report(6, ok, f"multiplicity 1 and sign similarity on {res.checked} graphs, failures={len(res.failures)}",
           time.time() - t0)
    assert ok


def test_criterion_7_lattice_law(report):
    t0 = time.time()
    members = [(make_c(m), make_psi_c(m)) for m in range(2, 41)]
    for h in [make_h_t(1), make_h_t(2), make_h_t(3), make_fat_star(1), make_fat_star(2), make_fat_star(3),
              make_f_prime_3()] + [m.graph for m in family_F(2)]:
        members.append((h, solve_reduced_integral(h).rep))
    bad = [i for i, (h, psi) in enumerate(members) if psi is None or not lattice_law(h, psi)]
    ok = not bad
    report(7, ok, f"lattice law on {len(members)} catalog members, bad={bad}", time.time() - t0)
    assert ok


def test_criterion_8_saturated_structure(report):
    t0 = time.time()
    instances = saturated_instances()
    bad = [h.to_json() for h in instances if saturated_structure_problems(h)]
    ok = len(instances) > 0 and not bad
    report(8, ok, f"{len(instances)} fat saturated indecomposable IR instances, violations={len(bad)}",
           time.time() - t0)
    assert ok


def test_criterion_9_small_reconstruction(report):
    t0 = time.time()
    res = enumerate_small_tree_like(3)
    found = {name: sum(hoffman_isomorphic(g, m) for m in res.maximal)
             for name, g in [("h3", make_h_t(3)), ("fat_star", make_fat_star(3)), ("c2", make_c(2)),
                             ("c3", make_c(3)), ("f_prime_3", make_f_prime_3())]}
    dt = time.time() - t0
    ok = len(res.maximal) == 5 and all(v == 1 for v in found.values()) and dt < 300
    report(9, ok, f"{len(res.maximal)} maximal members, matches {found}", dt)
    assert ok
