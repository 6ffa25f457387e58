"""Command-line front end: ``pathcover-lab <command> ...``.

Graphs are given as graph6 strings or family specs such as ``H3(2,3)``;
with no graph argument, graph6 lines are read from standard input.
Exit status: 0 when every check passed, 1 when a check failed (including a
violated hypothesis in ``cover``), 2 on bad input or a refused budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .constructive import HypothesisViolation, bounded_path_cover, bounded_path_partition
from .families import SpecError, generate, looks_like_spec, parse_spec
from .freeness import find_induced
from .graph import Graph, GraphInputError, from_graph6, to_graph6
from .sampling import sample_graphs
from .solvers import (
    cycle_cover_number,
    cycle_partition_number,
    has_hamiltonian_path,
    independence_number,
    maximum_independent_set,
    path_cover_number,
    path_partition_number,
)
from .verify import SUITES, Check, run_suite

DEFAULT_PATH_BUDGET = 18
DEFAULT_CYCLE_BUDGET = 16
INVARIANTS = ("alpha", "pc", "pp", "cc", "cp", "ham")


class CliError(Exception):
    pass


def _read_graph(text: str) -> Graph:
    text = text.strip()
    if looks_like_spec(text):
        return generate(parse_spec(text))
    return from_graph6(text)


def _graphs(args) -> list[tuple[str, Graph]]:
    items = args.graphs or [line.strip() for line in sys.stdin if line.strip()]
    if not items:
        raise CliError("no graph given (pass graph6 or a family spec, or pipe graph6 lines)")
    return [(item, _read_graph(item)) for item in items]


def _budget(args, kind: str) -> int:
    if args.max_order_exact is not None:
        return args.max_order_exact
    return DEFAULT_PATH_BUDGET if kind == "path" else DEFAULT_CYCLE_BUDGET


def _within_budget(g: Graph, args, kind: str) -> None:
    cap = _budget(args, kind)
    if g.order > cap:
        raise CliError(f"order {g.order} exceeds the exact-solver budget {cap} "
                       f"(raise it with --max-order-exact)")


def _report(command: str, args, results, checks: list[Check]) -> dict:
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "command")}
    return {"command": command, "inputs": inputs, "results": results, "checks": [c.to_dict() for c in checks]}


# --- commands ---------------------------------------------------------------

def cmd_gen(args):
    results = [to_graph6(generate(parse_spec(s))) for s in args.specs]
    return results, [], "\n".join(results)


def cmd_invariants(args):
    which = args.which.split(",") if args.which else list(INVARIANTS)
    unknown = [w for w in which if w not in INVARIANTS]
    if unknown:
        raise CliError(f"unknown invariant(s) {unknown}; choose from {', '.join(INVARIANTS)}")
    results, checks, lines = [], [], []
    for text, g in _graphs(args):
        if g.order == 0:
            raise CliError(f"{text!r} is the empty graph; invariants need at least one vertex")
        entry = {"graph": to_graph6(g), "order": g.order}
        for w in which:
            if w == "alpha":
                s = maximum_independent_set(g)
                entry["alpha"] = {"value": len(s), "witness": sorted(s)}
            elif w == "ham":
                _within_budget(g, args, "path")
                entry["ham"] = has_hamiltonian_path(g)
            else:
                kind = "path" if w in ("pc", "pp") else "cycle"
                _within_budget(g, args, kind)
                fn = {"pc": path_cover_number, "pp": path_partition_number,
                      "cc": cycle_cover_number, "cp": cycle_partition_number}[w]
                value, system = fn(g)
                entry[w] = {"value": value, "witness": system.to_dict()}
                # Solvers validate their witnesses; the check records that they did.
                checks.append(Check(f"{w} witness valid", True, entry["graph"]))
        if "pp" in entry and "ham" in entry:
            ok = entry["ham"] == (entry["pp"]["value"] == 1)
            checks.append(Check("ham iff pp = 1", ok, entry["graph"]))
        if "pc" in entry and "pp" in entry and "alpha" in entry:
            ok = entry["pc"]["value"] <= entry["pp"]["value"] <= entry["alpha"]["value"]
            checks.append(Check("pc <= pp <= alpha", ok, entry["graph"]))
        results.append(entry)
        parts = []
        for w in which:
            val = entry[w]
            parts.append(f"{w}={str(val).lower() if w == 'ham' else val['value']}")
        lines.append(f"{text}: " + " ".join(parts))
    return results, checks, "\n".join(lines)


def cmd_free(args):
    members = [(m, _read_graph(m)) for m in args.family]
    results, lines = [], []
    for text, g in _graphs(args):
        found = []
        for name, h in members:
            emb = find_induced(g, h)
            found.append({"member": name, "present": emb is not None, "witness": list(emb) if emb else None})
        free = not any(f["present"] for f in found)
        results.append({"graph": to_graph6(g), "free": free, "members": found})
        detail = ", ".join(f"{f['member']} at {f['witness']}" for f in found if f["present"])
        lines.append(f"{text}: free" if free else f"{text}: not free ({detail})")
    return results, [], "\n".join(lines)


def cmd_cover(args):
    fn = bounded_path_cover if args.mode == "cover" else bounded_path_partition
    results, checks, lines = [], [], []
    for text, g in _graphs(args):
        g6 = to_graph6(g)
        try:
            system, cert = fn(g, args.n, check_freeness=args.check_freeness)
        except HypothesisViolation as exc:
            checks.append(Check(exc.prop, False, f"{g6}: {exc.detail}"))
            results.append({"graph": g6, "error": str(exc)})
            print(f"error: {text}: {exc}", file=sys.stderr)
            continue
        ok = len(system) <= cert.total_bound
        checks.append(Check("size <= total_bound", ok, g6))
        results.append({"graph": g6, "paths": system.to_dict(), "certificate": cert.to_dict()})
        lines.append(f"{text}: {len(system)} path(s), bound {cert.total_bound}")
        lines.extend("  " + " ".join(map(str, p)) for p in system.paths)
    return results, checks, "\n".join(lines)


def cmd_verify(args):
    checks = run_suite(args.suite, seed=args.seed, count=args.count)
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name}  ({c.detail})" for c in checks]
    return [c.to_dict() for c in checks], checks, "\n".join(lines)


def cmd_sample(args):
    try:
        gs = sample_graphs(args.order, args.p, args.seed, args.count, args.connected_only)
        results = [to_graph6(g) for g in gs]
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return results, [], "\n".join(results)


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the subcommand.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON report instead of text")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    common.add_argument("--max-order-exact", type=int, default=argparse.SUPPRESS,
                        help=f"order cap for exact solvers (default {DEFAULT_PATH_BUDGET} for pc/pp/ham, "
                             f"{DEFAULT_CYCLE_BUDGET} for cc/cp)")

    parser = argparse.ArgumentParser(prog="pathcover-lab", parents=[common],
                                     description="Path and cycle cover numbers of small graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print graph6 of family members")
    p.add_argument("specs", nargs="+", help="e.g. K(3) Kstar(4) F1(3,3) H3(2,3)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("invariants", parents=[common], help="exact alpha, pc, pp, cc, cp, ham")
    p.add_argument("graphs", nargs="*", help="graph6 strings or family specs (default: stdin)")
    p.add_argument("--which", default=None, help=f"comma list from {','.join(INVARIANTS)} (default all)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("free", parents=[common], help="induced-subgraph freeness")
    p.add_argument("graphs", nargs="*", help="graph6 strings or family specs (default: stdin)")
    p.add_argument("--family", action="append", required=True,
                   help="forbidden member as spec or graph6; repeat for several")
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("cover", parents=[common], help="constructive bounded path cover/partition")
    p.add_argument("graphs", nargs="*", help="graph6 strings or family specs (default: stdin)")
    p.add_argument("--n", type=int, required=True, help="forbidden-family parameter n >= 2")
    p.add_argument("--mode", choices=("cover", "partition"), default="cover")
    p.add_argument("--check-freeness", action="store_true", help="reject inputs containing a forbidden graph")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--count", type=int, default=200, help="sample size for randomized checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", parents=[common], help="seeded G(n, p) graphs as graph6")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--p", type=float, required=True, help="edge probability")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--connected-only", action="store_true")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # Certificate constants for n >= 4 run to thousands of digits.
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("seed", 0), ("max_order_exact", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        results, checks, text = args.func(args)
    except (CliError, GraphInputError, SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(_report(args.command, args, results, checks), indent=2))
    elif text:
        print(text)
    return 0 if all(c.ok for c in checks) else 1


if __name__ == "__main__":
    sys.exit(main())
