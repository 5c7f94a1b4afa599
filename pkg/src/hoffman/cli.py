"""Command-line front end: ``hoffman <subcommand> ...``.

Exit codes: 0 success, 1 internal error, 2 usage or input error,
3 proven negative (not representable, failed assertion), 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import os
import sys

from . import io
from .catalog import CATALOG_NAMES, catalog_member, family_F
from .classify import (DEFAULT_NODE_BUDGET, WORKERS_ENV, brute_force_ir_trees,
                       enumerate_fat_3_seedlings, verify_main_theorem)
from .hoffman import (decompose, is_indecomposable, lambda_min_cmp3, lambda_min_float, special_graph,
                      special_matrix)
from .representation import Outcome, solve_reduced_integral
from .signed import enumerate_minus_matchings
from .smith import smith_graph

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_NEGATIVE, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _write(text: str, path: str | None = None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- subcommands -----------------------------------------------------------------

def cmd_analyze(args) -> int:
    h = io.load_hoffman(args.input)
    if not h.slim:
        raise io.InputError("the Hoffman graph has no slim vertices")
    sg = special_graph(h)
    report = {
        "slim": [int(v) for v in h.slim],
        "fat": [int(v) for v in h.fat],
        "special_matrix": special_matrix(h).tolist(),
        "lambda_vs_minus3": lambda_min_cmp3(h).value,
        "lambda_min": round(lambda_min_float(h), 12),
        "indecomposable": is_indecomposable(h),
        "factors": len(decompose(h)),
        "factor_slims": [[int(v) for v in p.slim] for p in decompose(h)],
        "special_graph": {
            "plus": sorted([int(h.slim[u]), int(h.slim[v])] for u, v in sg.plus),
            "minus": sorted([int(h.slim[u]), int(h.slim[v])] for u, v in sg.minus),
        },
        "weights": {str(int(x)): h.weight(x) for x in h.slim},
        "tree_like": h.is_tree_like(),
    }
    _write(io.dumps(report), args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    h = io.load_hoffman(args.input)
    if args.t != 3:
        raise UsageError("only --t 3 is supported")
    res = solve_reduced_integral(h, t=args.t, dim_cap=args.dim_cap, node_budget=args.budget)
    out = {"outcome": res.outcome.value, "nodes": res.nodes}
    if res.found:
        out["dim"] = res.rep.dim
        out["vectors"] = {str(int(k)): list(v) for k, v in res.rep.vectors.items()}
        out["gram"] = res.rep.gram(h.slim).tolist()
    else:
        out["reason"] = res.reason
        out["relative_to_dim_cap"] = res.cap_hit
    _write(io.dumps(out), args.output)
    return {Outcome.FOUND: EXIT_OK, Outcome.NOT_REPRESENTABLE: EXIT_NEGATIVE,
            Outcome.BUDGET_EXCEEDED: EXIT_BUDGET}[res.outcome]


def cmd_catalog(args) -> int:
    if args.name == "family-F":
        members = family_F(args.max_m)
        out = [{"tag": m.tag, "graph": io.canonical_hoffman_dict(m.graph)} for m in members]
        _write(io.dumps(out), args.output)
        return EXIT_OK
    param = args.param
    if args.name == "esimilar":
        base = smith_graph(_base_kind(param or "e6"))
        classes = enumerate_minus_matchings(base)
        k = args.matching
        if not 0 <= k < len(classes):
            raise UsageError(f"--matching must be in 0..{len(classes) - 1}")
        from .catalog import make_esimilar_seedling
        h, psi = make_esimilar_seedling(base, classes[k].representative), None
    else:
        try:
            h, psi = catalog_member(args.name, param)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    out = {"name": args.name, "graph": io.canonical_hoffman_dict(h)}
    if psi is not None:
        out["psi"] = {"dim": psi.dim, "vectors": {str(k): list(v) for k, v in sorted(psi.vectors.items())}}
    _write(io.dumps(out), args.output)
    return EXIT_OK


def _base_kind(text: str) -> str:
    key = text.strip().lower()
    kinds = {"e6": "E6~", "e7": "E7~", "e8": "E8~"}
    if key not in kinds:
        raise UsageError(f"base must be one of e6, e7, e8, not {text!r}")
    return kinds[key]


def cmd_trees(args) -> int:
    entries = brute_force_ir_trees(args.max_n, node_budget=args.budget, workers=args.workers)
    rows = []
    for i, e in enumerate(entries):
        wfile = ""
        if e.witness is not None and args.witness_dir:
            os.makedirs(args.witness_dir, exist_ok=True)
            wfile = os.path.join(args.witness_dir, f"tree_{i:05d}.json")
            with open(wfile, "w", encoding="utf-8") as fh:
                fh.write(io.dumps(e.witness.to_dict()))
        rep = {True: "true", False: "false", None: "inconclusive"}[e.representable]
        rows.append({"code": e.code.decode(), "n": e.n, "lambda_cmp": e.lambda_vs_minus3.value,
                     "representable": rep, "dim": e.witness.dim if e.witness else "",
                     "witness-file": wfile})
    cols = ["code", "n", "lambda_cmp", "representable", "dim", "witness-file"]
    if args.json:
        _write(io.dumps(rows), args.output)
    elif args.csv:
        buf = _io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _write(buf.getvalue(), args.output)
    else:
        lines = [f"{'n':>3}  {'lambda':<7}  {'IR':<12}  {'dim':>3}  code"]
        for r in rows:
            lines.append(f"{r['n']:>3}  {r['lambda_cmp']:<7}  {r['representable']:<12}  {r['dim']!s:>3}  {r['code']}")
        neg = sum(r["representable"] == "false" for r in rows)
        lines.append(f"trees: {len(rows)}  not representable: {neg}")
        _write("\n".join(lines) + "\n", args.output)
    return EXIT_BUDGET if any(e.representable is None for e in entries) else EXIT_OK


def cmd_seedlings(args) -> int:
    kind = _base_kind(args.base)
    seeds = enumerate_fat_3_seedlings(args.base)
    classes = enumerate_minus_matchings(smith_graph(kind))
    if args.json:
        out = [{"matching": [list(e) for e in c.representative], "orbit": c.orbit_size,
                "graph": io.canonical_hoffman_dict(h)} for c, h in zip(classes, seeds)]
        _write(io.dumps(out), args.output)
        return EXIT_OK
    lines = []
    for i, (c, h) in enumerate(zip(classes, seeds)):
        verdict = solve_reduced_integral(h).outcome.value
        matching = " ".join(f"{u}-{v}" for u, v in c.representative) or "-"
        lines.append(f"{i:>3}  lambda={lambda_min_cmp3(h).value:<7}  {verdict:<18}  minus: {matching}")
    lines.append(f"count: {len(seeds)}")
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.what == "main-theorem":
        rep = verify_main_theorem(args.max_n, slack=args.slack)
        summary = rep.summary()
        summary["slack_failures"] = [c.decode() for c in rep.slack_failures] if args.list_failures else None
        _write(io.dumps(summary), args.output)
        ok = rep.ok and (rep.within_slack or not args.require_slack)
        if rep.inconclusive:
            return EXIT_BUDGET
        return EXIT_OK if ok else EXIT_NEGATIVE
    from .properties import run_property_suite
    results = run_property_suite(args.seed, args.count)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.name}  checked={r.checked}  failures={len(r.failures)}"
             for r in results]
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(r.ok for r in results) else EXIT_NEGATIVE


def cmd_export(args) -> int:
    h = io.load_hoffman(args.input)
    if args.format == "json":
        if args.special:
            raise UsageError("--special is only available with --format dot")
        text = io.dumps(io.canonical_hoffman_dict(h))
    elif args.special:
        text = special_graph(h).to_dot("S")
    else:
        text = h.to_dot()
    _write(text, args.output)
    return EXIT_OK


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hoffman", description="Hoffman graphs and integrally representable trees of norm 3.")
    p.add_argument("--workers", type=_positive, default=None,
                   help=f"worker processes for enumerations (default: ${WORKERS_ENV} or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="special matrix, lambda_min vs -3, decomposition")
    a.add_argument("input")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("solve", help="search for an integral reduced representation of norm 3")
    s.add_argument("input")
    s.add_argument("--t", type=int, default=3)
    s.add_argument("--dim-cap", type=_positive, default=None)
    s.add_argument("--budget", type=_positive, default=DEFAULT_NODE_BUDGET, help="solver node budget")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("catalog", help="emit a named catalog member")
    c.add_argument("name", choices=[*CATALOG_NAMES, "family-F"])
    c.add_argument("--param", help="t for h_t, k for fat_star, m for c, e6|e7|e8 for esimilar")
    c.add_argument("--matching", type=_nonnegative, default=0, help="matching class index for esimilar")
    c.add_argument("--max-m", type=_positive, default=4, help="largest c_m listed by family-F")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_catalog)

    t = sub.add_parser("trees", help="census of trees on at most N vertices")
    t.add_argument("--max-n", type=_positive, required=True)
    fmt = t.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    t.add_argument("--budget", type=_positive, default=DEFAULT_NODE_BUDGET)
    t.add_argument("--witness-dir", help="write one representation JSON per representable tree")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_trees)

    sd = sub.add_parser("seedlings", help="fat 3-seedlings over E6~, E7~ or E8~")
    sd.add_argument("--base", required=True, choices=["e6", "e7", "e8"])
    sd.add_argument("--json", action="store_true")
    sd.add_argument("-o", "--output")
    sd.set_defaults(func=cmd_seedlings)

    v = sub.add_parser("verify", help="cross-checks and property suites")
    v.add_argument("what", choices=["main-theorem", "properties"])
    v.add_argument("--max-n", type=_positive, default=8)
    v.add_argument("--slack", type=_nonnegative, default=6)
    v.add_argument("--require-slack", action="store_true",
                   help="also fail when some tree has no constructed host within the slack")
    v.add_argument("--list-failures", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=_positive, default=200)
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="re-emit a Hoffman graph as canonical JSON or DOT")
    e.add_argument("input")
    e.add_argument("--format", required=True, choices=["dot", "json"])
    e.add_argument("--special", action="store_true", help="DOT of the signed special graph instead")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    if args.workers is None:
        from .classify import worker_count
        args.workers = worker_count()
    try:
        return args.func(args)
    except (io.InputError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
