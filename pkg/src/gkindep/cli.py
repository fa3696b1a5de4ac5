"""Command-line surface; every subcommand is a thin adapter over the library.

Exit codes: 0 success, 1 invalid input (or an invalid set for `verify`),
2 exact-solver budget exhausted, 3 internal guarantee violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .bounds import refined_bound
from .construct import construct_set, equality_refinement, verify_set
from .cycles import CycleStructure, cycle_structure
from .errors import (
    BudgetExhausted,
    GkError,
    InternalGuaranteeViolation,
    RefinementFailure,
)
from .exact import DEFAULT_BUDGET, exact_alpha
from .extremal import (
    BlockDecomposition,
    check_extremal,
    generate_extremal_plan,
    generate_r_tree,
    r_membership,
)
from .families import figure1_graph
from .graph import Graph, parse_graph, write_graph

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2
EXIT_INTERNAL = 3


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    report: str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise _UsageError(f"{message}\n{self.format_usage()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="gkindep", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    def add(name, help_text, k=True, files=True, jobs=True):
        p = sub.add_parser(name, help=help_text)
        if k:
            p.add_argument("--k", type=int, required=True, help="tree-size parameter, >= 2")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        if files:
            p.add_argument("--one-indexed", action="store_true",
                           help="input files number vertices from 1")
            if jobs:
                p.add_argument("--jobs", type=int, default=1,
                               help="process input files concurrently")
            p.add_argument("files", nargs="+", help="edge-list input files")
        return p

    add("analyze", "cycle inventory: omega, cycles, pendant anchors", k=False)
    add("bound", "itemized lower-bound report")
    p = add("construct", "build a certified large valid set")
    p = add("exact", "provably optimal value (branch and bound)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="search-node budget")
    p = add("verify", "check a vertex set and report its largest component")
    p.add_argument("--set", required=True, dest="vertex_set",
                   help="comma-separated vertex ids")
    add("check-extremal", "test the three equality conditions")
    add("rtree-member", "decide k-block tree family membership")

    p = sub.add_parser("gen-rtree", help="generate a random k-block tree")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--blocks", type=int, required=True, help="number of k-blocks")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="write edge list here plus a .json sidecar")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gen-extremal", help="generate a planted extremal graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cycles", default="",
                   help="comma-separated cycle multipliers a_i (lengths a_i*k+1)")
    p.add_argument("--tree-blocks", type=int, default=0)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="write edge list here plus a .json sidecar")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("figure1", help="run the full pipeline on the built-in example")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def _read_graph(path: str, one_indexed: bool) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GkError(f"cannot read {path}: {exc}") from None
    return parse_graph(text, one_indexed=one_indexed)


def _frac_text(fr) -> str:
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def _analyze_one(g: Graph, as_json: bool) -> tuple[int, str]:
    cs = cycle_structure(g)
    if as_json:
        return EXIT_OK, json.dumps(cs.as_dict(), indent=2)
    lines = [f"n={g.n} m={g.m}"]
    if isinstance(cs, CycleStructure):
        lines.append(f"omega={cs.omega}, cycles pairwise vertex-disjoint")
        for i, cyc in enumerate(cs.cycles):
            anchor = cs.pendant_anchor[i]
            tail = f", pendant anchor {anchor}" if anchor is not None else ""
            lines.append(f"cycle {i}: length {len(cyc)}, vertices {list(cyc)}{tail}")
        lines.append(f"off-cycle vertices: {list(cs.gamma_old_ids)}")
    else:
        lines.append(f"omega={cs.omega}, cycles overlap (witness vertex {cs.witness})")
    return EXIT_OK, "\n".join(lines)


def _bound_one(g: Graph, k: int, as_json: bool) -> tuple[int, str]:
    report = refined_bound(g, k)
    if as_json:
        return EXIT_OK, json.dumps(report.as_dict(), indent=2)
    lines = [
        f"n={report.n} omega={report.omega} k={report.k}",
        f"cycles disjoint : {'yes' if report.cycles_disjoint else 'no'}",
        f"base            : {_frac_text(report.base)}",
        f"base_ceil       : {report.base_ceil}",
    ]
    if report.overlap_slack:
        lines.append(f"overlap slack   : +{_frac_text(report.overlap_slack)}")
    for q, s in report.pendant_slacks:
        lines.append(f"pendant cycle q={q}: +{_frac_text(s)}")
    for gs in report.gamma_slacks:
        extra = " and +1 (k-divisible, not a k-block tree)" if gs.plus_one else ""
        lines.append(
            f"off-cycle component size {gs.size}: +{_frac_text(gs.slack)}{extra}"
        )
    lines.append(f"combined        : {report.combined}")
    lines.append(f"conservative    : {report.conservative}")
    return EXIT_OK, "\n".join(lines)


def _construct_one(g: Graph, k: int, as_json: bool) -> tuple[int, str]:
    result = construct_set(g, k)
    if as_json:
        return EXIT_OK, json.dumps(result.as_dict(), indent=2)
    lines = [
        f"size {len(result.vertices)} (guarantee {result.guarantee}), "
        f"max component {result.max_component}",
        f"vertices: {sorted(result.vertices)}",
        f"cycle-breaking removed: {sorted(result.phase_a_removed)}",
        f"tree-pruning removed: {sorted(result.phase_b_removed)}",
    ]
    return EXIT_OK, "\n".join(lines)


def _exact_one(g: Graph, k: int, budget: int, as_json: bool) -> tuple[int, str]:
    result = exact_alpha(g, k, budget=budget)
    if as_json:
        return EXIT_OK, json.dumps(result.as_dict(), indent=2)
    return EXIT_OK, (
        f"alpha={result.alpha} tau={result.tau} method={result.method} "
        f"nodes={result.nodes_explored}\nwitness: {list(result.witness)}"
    )


def _verify_one(g: Graph, k: int, vertex_set: str, one_indexed: bool,
                as_json: bool) -> tuple[int, str]:
    shift = 1 if one_indexed else 0
    try:
        vertices = [int(tok) - shift for tok in vertex_set.split(",") if tok.strip()]
    except ValueError:
        raise GkError(f"bad --set value: {vertex_set!r}") from None
    max_component = verify_set(g, k, vertices)
    valid = max_component <= k - 1
    if as_json:
        doc = {"valid": valid, "max_component": max_component, "k": k,
               "size": len(set(vertices))}
        return (EXIT_OK if valid else EXIT_INVALID), json.dumps(doc, indent=2)
    word = "valid" if valid else "invalid"
    return (EXIT_OK if valid else EXIT_INVALID), (
        f"{word}, max component {max_component}"
    )


def _check_extremal_one(g: Graph, k: int, as_json: bool) -> tuple[int, str]:
    report = check_extremal(g, k)
    if as_json:
        return EXIT_OK, json.dumps(report.as_dict(), indent=2)
    lines = [
        f"extremal: {'yes' if report.is_extremal else 'no'} "
        f"(n={report.n}, omega={report.omega}, k={report.k})",
        f"(i) cycles disjoint: {'yes' if report.condition_i else 'no'}"
        + (f" (witness {report.overlap_witness})" if report.overlap_witness is not None else ""),
    ]
    if report.cycles_disjoint:
        lines.append(
            "(ii) cycle lengths 1 mod k: "
            + ", ".join(f"{c.length}:{'ok' if c.ok else 'BAD'}" for c in report.cycle_conditions)
            if report.cycle_conditions else "(ii) no cycles"
        )
        for c in report.gamma_conditions:
            verdict = "ok" if (c.divisible and c.member) else "BAD"
            lines.append(f"(iii) component size {c.size}: {verdict}")
    return EXIT_OK, "\n".join(lines)


def _rtree_member_one(g: Graph, k: int, as_json: bool) -> tuple[int, str]:
    result = r_membership(g, k)
    member = isinstance(result, BlockDecomposition)
    if as_json:
        doc = {"member": True, **result.as_dict()} if member else result.as_dict()
        return EXIT_OK, json.dumps(doc, indent=2)
    if member:
        return EXIT_OK, "member\nblocks: " + " ".join(str(list(b)) for b in result.blocks)
    detail = f" (witness vertex {result.witness}, subtree {result.witness_size})" \
        if result.witness is not None else ""
    return EXIT_OK, f"not a member: {result.reason}{detail}"


def _emit_generated(g: Graph, plan: dict, out: str | None, as_json: bool) -> tuple[int, str]:
    text = write_graph(g)
    if out:
        Path(out).write_text(text)
        Path(out + ".json").write_text(json.dumps(plan, indent=2) + "\n")
        return EXIT_OK, f"wrote {out} and {out}.json (n={g.n}, m={g.m})"
    if as_json:
        return EXIT_OK, json.dumps({"edge_list": text, "structure": plan}, indent=2)
    return EXIT_OK, text.rstrip("\n")


def _figure1(k: int, budget: int, as_json: bool) -> tuple[int, str]:
    g = figure1_graph(k)
    cs = cycle_structure(g)
    assert isinstance(cs, CycleStructure)
    bound = refined_bound(g, k)
    constructed = construct_set(g, k)
    report = check_extremal(g, k)
    refined = equality_refinement(g, k) if report.is_extremal else None
    exact = exact_alpha(g, k, budget=budget) if g.n <= 30 else None
    rows = [
        ("n", g.n),
        ("m", g.m),
        ("omega", cs.omega),
        ("base_ceil", bound.base_ceil),
        ("combined bound", bound.combined),
        ("constructed size", len(constructed.vertices)),
        ("refinement size", len(refined.vertices) if refined else None),
        ("exact alpha", exact.alpha if exact else None),
        ("extremal", report.is_extremal),
    ]
    if as_json:
        doc = {key.replace(" ", "_"): value for key, value in rows}
        return EXIT_OK, json.dumps(doc, indent=2)
    width = max(len(key) for key, _ in rows)
    lines = [f"{key.ljust(width)}  {'-' if value is None else value}" for key, value in rows]
    return EXIT_OK, "\n".join(lines)


def _run_over_files(args, worker) -> CommandOutcome:
    files = args.files
    jobs = max(1, getattr(args, "jobs", 1))

    def run_one(path: str) -> tuple[int, str]:
        try:
            g = _read_graph(path, getattr(args, "one_indexed", False))
            return worker(g)
        except BudgetExhausted as exc:
            return EXIT_BUDGET, f"budget exhausted: incumbent alpha={exc.incumbent.alpha}"
        except (InternalGuaranteeViolation, RefinementFailure) as exc:
            return EXIT_INTERNAL, f"internal error: {exc}"
        except GkError as exc:
            return EXIT_INVALID, f"error: {exc}"

    if jobs > 1 and len(files) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, files))
    else:
        results = [run_one(path) for path in files]
    code = max(code for code, _ in results)
    if len(files) == 1:
        return CommandOutcome(code, results[0][1])
    chunks = [f"== {path} ==\n{text}" for path, (_, text) in zip(files, results)]
    return CommandOutcome(code, "\n".join(chunks))


def dispatch(argv) -> CommandOutcome:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandOutcome(EXIT_INVALID, str(exc))
    if args.command is None:
        return CommandOutcome(EXIT_INVALID, parser.format_usage())
    try:
        if args.command == "analyze":
            return _run_over_files(args, lambda g: _analyze_one(g, args.json))
        if args.command == "bound":
            return _run_over_files(args, lambda g: _bound_one(g, args.k, args.json))
        if args.command == "construct":
            return _run_over_files(args, lambda g: _construct_one(g, args.k, args.json))
        if args.command == "exact":
            return _run_over_files(
                args, lambda g: _exact_one(g, args.k, args.budget, args.json)
            )
        if args.command == "verify":
            return _run_over_files(
                args,
                lambda g: _verify_one(
                    g, args.k, args.vertex_set, args.one_indexed, args.json
                ),
            )
        if args.command == "check-extremal":
            return _run_over_files(args, lambda g: _check_extremal_one(g, args.k, args.json))
        if args.command == "rtree-member":
            return _run_over_files(args, lambda g: _rtree_member_one(g, args.k, args.json))
        if args.command == "gen-rtree":
            g = generate_r_tree(args.blocks, args.k, args.seed)
            plan = {"k": args.k, "n": g.n, "blocks": [
                list(range(b * args.k, (b + 1) * args.k)) for b in range(args.blocks)
            ], "seed": args.seed}
            code, text = _emit_generated(g, plan, args.out, args.json)
            return CommandOutcome(code, text)
        if args.command == "gen-extremal":
            multipliers = [int(tok) for tok in args.cycles.split(",") if tok.strip()]
            g, plan = generate_extremal_plan(
                len(multipliers), multipliers, args.tree_blocks, args.k, args.seed
            )
            code, text = _emit_generated(g, plan, args.out, args.json)
            return CommandOutcome(code, text)
        if args.command == "figure1":
            code, text = _figure1(args.k, args.budget, args.json)
            return CommandOutcome(code, text)
    except BudgetExhausted as exc:
        return CommandOutcome(
            EXIT_BUDGET, f"budget exhausted: incumbent alpha={exc.incumbent.alpha}"
        )
    except (InternalGuaranteeViolation, RefinementFailure) as exc:
        return CommandOutcome(EXIT_INTERNAL, f"internal error: {exc}")
    except GkError as exc:
        return CommandOutcome(EXIT_INVALID, f"error: {exc}")
    return CommandOutcome(EXIT_INVALID, parser.format_usage())


def main(argv=None) -> int:
    outcome = dispatch(sys.argv[1:] if argv is None else argv)
    print(outcome.report)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
