"""Command-line surface.

Subcommands: construct, diameter, analyze, decide, enumerate, brute-force,
export-cnf, verify-claims.  Orientations travel as canonical JSON
({"parts": [...], "arcs": [[u,v], ...]}, arcs sorted), optionally with a
completion_log section describing choices a constructor made.  Exit codes:
0 success / all claims pass, 1 failed claim, 2 usage or data error,
3 a claim ended Unknown (budget).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .analysis import (
    AnalysisError,
    DiameterNotTwo,
    SIGN_LABELS,
    case_signature,
    sign_condition_violations,
    sign_partition,
)
from .claims import BadFamily, verify_claims
from .cnf import export_cnf
from .constructions import (
    ConstructionError,
    build_33q,
    build_34q,
    complete_graph_orientation,
    middle_layer_bipartite,
)
from .graphcore import (
    INFINITE,
    GraphError,
    diameter,
    dumps,
    loads,
    stable_json_dumps,
    to_dot,
    to_json_dict,
)
from .search import (
    SearchConfig,
    SearchError,
    brute_force_min_diameter,
    decide_diameter2,
    enumerate_diameter2,
)
from .graphcore import make_complete_multipartite

USAGE_ERROR = 2


class CliError(Exception):
    pass


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise CliError(f"--parts expects comma-separated integers, got {text!r}")
    if not parts:
        raise CliError("--parts must not be empty")
    return parts


def _read_orientation(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    D = loads(text)  # raises ParseError with line/column on malformed JSON
    return D, json.loads(text)


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_distance(d) -> str:
    return "infinite" if d == INFINITE else str(int(d))


def cmd_construct(args) -> int:
    parts = _parse_parts(args.parts)
    if args.scheme == "paper":
        if len(parts) == 3 and parts[0] == 3 and parts[1] == 3:
            D, recipe = build_33q(parts[2])
        elif len(parts) == 3 and parts[0] == 3 and parts[1] == 4:
            D, recipe = build_34q(parts[2])
        else:
            raise CliError(
                f"scheme 'paper' covers parts 3,3,q and 3,4,q; got {args.parts}"
            )
        log = recipe.completion_log
    elif args.scheme == "middle-layer":
        if len(parts) != 2:
            raise CliError("scheme 'middle-layer' needs two parts p,q")
        D = middle_layer_bipartite(parts[0], parts[1])
        log = ()
    else:  # tournament
        if any(p != 1 for p in parts):
            raise CliError("scheme 'tournament' needs parts 1,1,...,1")
        D = complete_graph_orientation(len(parts))
        log = ()
    if args.format == "dot":
        _emit(to_dot(D), args.out)
    else:
        _emit(dumps(D, completion_log=log), args.out)
    return 0


def cmd_diameter(args) -> int:
    D, _ = _read_orientation(args.file)
    d = diameter(D)
    if args.format == "json":
        _emit(stable_json_dumps({"parts": list(D.topology.parts),
                                 "diameter": None if d == INFINITE else int(d)}), None)
    else:
        print(_fmt_distance(d))
    return 0


def cmd_analyze(args) -> int:
    D, _ = _read_orientation(args.file)
    partitions = sign_partition(D, args.anchor)
    try:
        violations = sign_condition_violations(D, args.anchor)
        verdict = "pass" if not violations else "violated"
    except DiameterNotTwo:
        violations, verdict = None, "not-applicable (diameter exceeds 2)"
    except AnalysisError:
        violations, verdict = None, "not-applicable (needs a tripartite orientation)"
    try:
        signature = case_signature(D)
    except AnalysisError:
        signature = None
    if args.format == "json":
        doc = {
            "parts": list(D.topology.parts),
            "anchor": args.anchor,
            "sign_classes": {
                f"part{pi + 1}": {label: list(sp.classes[label]) for label in SIGN_LABELS}
                for pi, sp in sorted(partitions.items())
            },
            "necessary_conditions": verdict,
            "violations": violations,
            "case_signature": None
            if signature is None
            else {"raw": list(signature.raw), "canonical": list(signature.canonical)},
        }
        _emit(stable_json_dumps(doc), None)
        return 0
    topo = D.topology
    print(f"sign partition of K{tuple(topo.parts)} anchored at part {args.anchor + 1}")
    header = "class    " + "".join(f"part{pi + 1:<4}" for pi in sorted(partitions))
    print(header)
    for label in SIGN_LABELS:
        row = f"{label:<9}"
        for pi in sorted(partitions):
            members = ",".join(topo.vertex_name(v) for v in partitions[pi].classes[label])
            row += f"{members or '-':<8}"
        print(row)
    print(f"diameter-2 necessary conditions: {verdict}")
    if violations:
        for v in violations:
            print(f"  violation: {v}")
    if signature is not None:
        print(f"case signature: raw {signature.raw} canonical {signature.canonical}")
    return 0


def _search_config(args) -> SearchConfig:
    return SearchConfig(
        node_budget=args.budget_nodes,
        time_budget=args.budget_seconds,
        symmetry_breaking=not args.no_symmetry,
        use_case_split=not args.no_case_split,
        thread_count=args.threads,
    )


def cmd_decide(args) -> int:
    parts = _parse_parts(args.parts)
    outcome = decide_diameter2(parts, _search_config(args))
    doc = {
        "parts": list(parts),
        "verdict": outcome.verdict.value,
        "witness": None if outcome.witness is None else to_json_dict(outcome.witness),
        "stats": {
            "nodes": outcome.stats.nodes,
            "max_depth": outcome.stats.max_depth,
            "wall_time": round(outcome.stats.wall_time, 4),
            "blocks_explored": outcome.stats.blocks_explored,
            "cases_enumerated": [list(c) for c in outcome.stats.cases_enumerated],
        },
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_enumerate(args) -> int:
    parts = _parse_parts(args.parts)
    topology = make_complete_multipartite(parts)
    found = enumerate_diameter2(topology, limit=args.limit)
    doc = {"parts": list(parts), "count": len(found),
           "orientations": [to_json_dict(D)["arcs"] for D in found]}
    _emit(json.dumps(doc) + "\n", args.out)
    return 0


def cmd_brute_force(args) -> int:
    parts = _parse_parts(args.parts)
    topology = make_complete_multipartite(parts)
    f_value = brute_force_min_diameter(topology)
    if args.format == "json":
        _emit(stable_json_dumps({"parts": list(parts),
                                 "oriented_diameter": None if f_value == INFINITE else int(f_value)}), None)
    else:
        print(_fmt_distance(f_value))
    return 0


def cmd_export_cnf(args) -> int:
    parts = _parse_parts(args.parts)
    stats = export_cnf(parts, args.out)
    print(
        f"wrote {args.out}: {stats.variables} variables "
        f"({stats.edge_variables} edge, {stats.path_variables} path, "
        f"{stats.lex_variables} lex), {stats.clauses} clauses"
    )
    return 0


def cmd_verify_claims(args) -> int:
    q_range = None
    if args.q_range:
        try:
            lo, hi = args.q_range.split("..")
            q_range = (int(lo), int(hi))
        except ValueError:
            raise CliError(f"--q-range expects LO..HI, got {args.q_range!r}")
    report = verify_claims(args.family, q_range=q_range, cfg=_search_config(args))
    if args.format == "json":
        _emit(report.to_json(), None)
    else:
        _emit(report.to_text(), None)
        for path in report.cnf_emitted:
            print(f"emitted CNF for external solving: {path}")
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orientdiam",
        description="construct, verify and search diameter-2 orientations of complete multipartite graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--seed", type=int, default=0,
                        help="reserved; every procedure is deterministic")
    common.add_argument("--threads", type=int, default=1)

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget-seconds", type=float, default=600.0)
    budget.add_argument("--budget-nodes", type=int, default=1_000_000_000)
    budget.add_argument("--no-symmetry", action="store_true")
    budget.add_argument("--no-case-split", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a known orientation family")
    p.add_argument("--parts", required=True)
    p.add_argument("--scheme", choices=("paper", "middle-layer", "tournament"), default="paper")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("diameter", parents=[common], help="measure an orientation file")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("analyze", parents=[common], help="sign classes and case signature")
    p.add_argument("--file", required=True)
    p.add_argument("--anchor", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", parents=[common, budget], help="decide diameter-2 orientability")
    p.add_argument("--parts", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("enumerate", parents=[common], help="list all diameter-2 orientations")
    p.add_argument("--parts", required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("brute-force", parents=[common], help="exact oriented diameter by enumeration")
    p.add_argument("--parts", required=True)
    p.set_defaults(func=cmd_brute_force)

    p = sub.add_parser("export-cnf", parents=[common], help="emit the DIMACS encoding")
    p.add_argument("--parts", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_cnf)

    p = sub.add_parser("verify-claims", parents=[common, budget], help="re-verify a claim family")
    p.add_argument("--family", required=True, choices=("33q", "34q", "baselines"))
    p.add_argument("--q-range", default=None)
    p.set_defaults(func=cmd_verify_claims)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphError, AnalysisError, ConstructionError, SearchError,
            BadFamily, json.JSONDecodeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
