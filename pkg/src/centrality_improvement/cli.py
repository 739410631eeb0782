"""Command-line front end.

Exit codes: 0 success (or decision "yes"), 1 malformed input or invalid
solution, 2 solver limit exceeded, 3 decision "no".
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .centrality import CentralityKind, betweenness, closeness, format_rational, parse_rational
from .generators import erdos_renyi, planted_clusters, random_family
from .graph import Graph, GraphError, InvalidSolutionError, format_edge_list, parse_edge_list
from .instances import (
    FORMAT_VERSION,
    ImprovementInstance,
    format_instance,
    instance_to_dict,
    parse_instance,
    parse_solution,
    solution_to_dict,
    verify,
)
from .reductions import (
    REDUCTIONS,
    DominatingSetInstance,
    SetCoverInstance,
    format_dominating_set,
    format_set_cover,
    parse_dominating_set,
    parse_set_cover,
)
from .solve_exact import SizeGuardError, greedy, solve_incident, solve_unrestricted
from .solve_fpt import (
    build_decomposition,
    cluster_vertex_deletion,
    solve_betweenness_fpt,
    solve_closeness_fpt,
)

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_NO = 0, 1, 2, 3


class _Guard(Exception):
    """A solver refused the input (too large or unsupported)."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit_json(data: dict) -> None:
    print(json.dumps({"format": FORMAT_VERSION, **data}, sort_keys=True))


def _vertex_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


# -- commands ----------------------------------------------------------------------

def cmd_centrality(args) -> int:
    g = parse_edge_list(_read(args.graph))
    g.check_vertex(args.z)
    kind = CentralityKind.parse(args.kind)
    if kind is CentralityKind.CLOSENESS:
        value = closeness(g, args.z, reverse=args.reverse)
    else:
        value = betweenness(g, args.z)
    if args.json:
        _emit_json({"command": "centrality", "kind": kind.value, "z": args.z, "value": format_rational(value)})
    else:
        print(format_rational(value))
    return EXIT_OK


def _decomposition(inst: ImprovementInstance, vds: str | None):
    if vds is None:
        return cluster_vertex_deletion(inst.g, inst.z)
    return build_decomposition(inst.g, inst.z, _vertex_list(vds))


def _solve(inst: ImprovementInstance, args):
    if args.solver == "incident":
        return solve_incident(inst, early_exit=args.early_exit)
    if args.solver == "greedy":
        return greedy(inst)
    if args.solver == "oracle":
        return solve_unrestricted(inst, max_subsets=args.max_subsets)
    if inst.g.directed:
        raise _Guard("the fpt solvers handle undirected graphs only")
    dec = _decomposition(inst, args.vds)
    if inst.kind.centrality is CentralityKind.CLOSENESS:
        return solve_closeness_fpt(inst, dec)
    return solve_betweenness_fpt(inst, dec)


def cmd_improve(args) -> int:
    inst = parse_instance(_read(args.instance))
    report = _solve(inst, args)
    best = report.best
    yes = best.achieved >= inst.r
    if args.json:
        _emit_json({
            "command": "improve",
            "solver": report.solver,
            "r": format_rational(inst.r),
            "solution": solution_to_dict(best),
            "decision": "yes" if yes else "no",
            "candidates_evaluated": report.candidates_evaluated,
        })
    else:
        print(f"solver {report.solver}")
        print(f"r {format_rational(inst.r)}")
        print(f"achieved {format_rational(best.achieved)}")
        for u, v in best.additions:
            print(f"add {u} {v}")
        print(f"decision {'yes' if yes else 'no'}")
    return EXIT_OK if yes else EXIT_NO


def cmd_cvd(args) -> int:
    g = parse_edge_list(_read(args.graph))
    dec = cluster_vertex_deletion(g, args.z)
    if args.json:
        _emit_json({
            "command": "cvd",
            "z": args.z,
            "ell": dec.ell,
            "vds": list(dec.vds),
            "clusters": [list(c) for c in dec.clusters],
        })
    else:
        print(f"ell {dec.ell}")
        print("vds" + "".join(f" {v}" for v in dec.vds))
        for members in dec.clusters:
            print("cluster " + " ".join(map(str, members)))
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read(args.input)
    source = parse_set_cover(text) if args.source.startswith("sc") else parse_dominating_set(text)
    out = REDUCTIONS[args.source](source)
    roles = {str(v): role for v, role in sorted(out.role_map.items())}
    if args.roles:
        with open(args.roles, "w", encoding="utf-8") as fh:
            json.dump({"format": FORMAT_VERSION, "roles": roles, "alpha": out.alpha}, fh, sort_keys=True)
            fh.write("\n")
    if args.json:
        _emit_json({"command": "reduce", "instance": instance_to_dict(out.inst), "roles": roles, "alpha": out.alpha})
    else:
        sys.stdout.write(format_instance(out.inst))
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.instance))
    pairs, claimed = parse_solution(_read(args.solution))
    ok, achieved = verify(inst, pairs)
    if claimed is not None and claimed != achieved:
        print(
            f"claimed value {format_rational(claimed)} differs from recomputed {format_rational(achieved)}",
            file=sys.stderr,
        )
        return EXIT_INPUT
    if args.json:
        _emit_json({
            "command": "verify",
            "achieved": format_rational(achieved),
            "r": format_rational(inst.r),
            "decision": "yes" if ok else "no",
        })
    else:
        print(f"achieved {format_rational(achieved)}")
        print(f"r {format_rational(inst.r)}")
        print(f"decision {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_NO


def _instance_or_graph(g: Graph, z: int, args) -> str:
    if args.k is None:
        return format_edge_list(g)
    inst = ImprovementInstance.build(g, z, args.k, parse_rational(args.r), args.kind)
    return format_instance(inst)


def cmd_gen(args) -> int:
    if args.model == "er":
        g = erdos_renyi(args.n, args.p, args.seed, directed=args.directed)
        sys.stdout.write(_instance_or_graph(g, args.z, args))
    elif args.model == "planted":
        rng = random.Random(args.seed)
        sizes = [rng.randint(args.min_size, args.max_size) for _ in range(args.clusters)]
        pc = planted_clusters(sizes, args.extra, rng.randrange(2**32), args.p_extra, args.p_z)
        print(f"# z {pc.z}")
        sys.stdout.write(_instance_or_graph(pc.g, pc.z, args))
    elif args.model == "ds":
        g = erdos_renyi(args.n, args.p, args.seed)
        sys.stdout.write(format_dominating_set(DominatingSetInstance(g, args.k)))
    else:
        family = random_family(args.n, args.m, args.seed, args.p)
        sys.stdout.write(format_set_cover(SetCoverInstance(args.n, tuple(map(tuple, family)), args.k)))
    return EXIT_OK


_BENCH_SOLVERS = ("incident", "greedy", "fpt")


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    rows = []
    for i in range(args.count):
        sizes = [rng.randint(1, 4) for _ in range(args.clusters)]
        pc = planted_clusters(sizes, args.extra, rng.randrange(2**32), p_z=0.1)
        for kind in (CentralityKind.CLOSENESS, CentralityKind.BETWEENNESS):
            inst = ImprovementInstance.build(pc.g, pc.z, args.k, 0, kind)
            dec = cluster_vertex_deletion(pc.g, pc.z)
            for solver in _BENCH_SOLVERS:
                start = time.perf_counter()
                if solver == "incident":
                    report = solve_incident(inst)
                elif solver == "greedy":
                    report = greedy(inst)
                elif kind is CentralityKind.CLOSENESS:
                    report = solve_closeness_fpt(inst, dec)
                else:
                    report = solve_betweenness_fpt(inst, dec)
                elapsed = time.perf_counter() - start
                rows.append({
                    "instance": i,
                    "n": pc.g.n,
                    "ell": dec.ell,
                    "kind": kind.value,
                    "solver": solver,
                    "achieved": format_rational(report.best.achieved),
                    "evaluated": report.candidates_evaluated,
                    **({} if args.no_times else {"ms": round(elapsed * 1000, 3)}),
                })
    if args.json:
        _emit_json({"command": "bench", "rows": rows})
        return EXIT_OK
    columns = list(rows[0]) if rows else []
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in columns}
    print("  ".join(c.rjust(widths[c]) for c in columns))
    for row in rows:
        print("  ".join(str(row[c]).rjust(widths[c]) for c in columns))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centrality-improvement",
        description="Exact closeness/betweenness improvement by edge addition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("centrality", help="exact centrality of one vertex")
    p.add_argument("--graph", required=True, help="edge-list file, or - for stdin")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--kind", required=True, choices=["c", "b", "closeness", "betweenness"])
    p.add_argument("--reverse", action="store_true", help="directed closeness toward z")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("improve", help="solve an improvement instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--solver", default="incident", choices=["incident", "fpt", "greedy", "oracle"])
    p.add_argument("--vds", help="comma-separated cluster deletion set for --solver fpt")
    p.add_argument("--early-exit", action="store_true", help="incident: stop at the first set reaching r")
    p.add_argument("--max-subsets", type=int, default=250_000, help="oracle: subset limit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("cvd", help="minimum cluster vertex deletion set")
    p.add_argument("--graph", required=True)
    p.add_argument("--z", type=int, default=None, help="vertex kept outside the clusters")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cvd)

    p = sub.add_parser("reduce", help="build an improvement instance from DS / SC")
    p.add_argument("--from", dest="source", required=True, choices=sorted(REDUCTIONS))
    p.add_argument("--input", required=True)
    p.add_argument("--roles", help="write the vertex role map as JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="recheck a solution against an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--solution", required=True, help="improve output (text or JSON), or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="seeded random inputs")
    p.add_argument("model", choices=["er", "planted", "ds", "sc"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=8, help="vertices (er, ds) or elements (sc)")
    p.add_argument("--m", type=int, default=4, help="sets (sc)")
    p.add_argument("--p", type=float, default=0.3, help="edge / membership probability")
    p.add_argument("--directed", action="store_true")
    p.add_argument("--clusters", type=int, default=3)
    p.add_argument("--extra", type=int, default=1)
    p.add_argument("--min-size", type=int, default=1)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--p-extra", type=float, default=0.5)
    p.add_argument("--p-z", type=float, default=0.2)
    p.add_argument("--z", type=int, default=0, help="target vertex for er instances")
    p.add_argument("--k", type=int, default=None, help="emit an instance (er, planted) or the budget (ds, sc)")
    p.add_argument("--r", default="0")
    p.add_argument("--kind", default="c", choices=["c", "b", "closeness", "betweenness"])
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the solvers on planted-cluster instances")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--clusters", type=int, default=3)
    p.add_argument("--extra", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--no-times", action="store_true", help="omit timings (for reproducible output)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and args.model in ("ds", "sc") and args.k is None:
        args.k = 2
    try:
        return args.func(args)
    except (_Guard, SizeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvalidSolutionError as exc:
        print(f"invalid solution: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
