"""Command-line entry point: ``cnineq <subcommand> ...``.

Exit status: 0 on success, 1 when a checked property is violated, 2 on usage,
parse or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import electrical as el
from . import good_pairs as gp
from . import inequality as iq
from .errors import CnineqError
from .graph import Graph, find_cycle, is_connected, parse_edge_list, to_dot, to_edge_list
from .harness.fuzz import PROPERTIES, fuzz_run
from .harness.generators import MODELS, GenSpec, gen_graph
from .report import dumps_json, dumps_text

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def _load(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def _emit(args, payload) -> None:
    print(dumps_json(payload) if getattr(args, "json", False) else dumps_text(payload))


def cmd_verify(args) -> int:
    g = _load(args.file)
    rep = iq.verify_theorem1(g)
    payload = {"n": g.n, "m": g.m, "theorem1": rep}
    ok = rep.holds and bool(rep.consistent)
    if args.ell is not None:
        gen = iq.verify_generalized(g, args.ell, args.path_cap)
        payload["generalized"] = gen
        ok = ok and gen.holds
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_good_pairs(args) -> int:
    g = _load(args.file)
    if args.all:
        rep = gp.all_orderings_report(g, args.n_limit)
        _emit(args, {
            "orderings": rep.orderings,
            "always_connected": rep.always_connected,
            "always_tree": rep.always_tree,
            "counterexample": None if rep.counterexample is None else str(rep.counterexample),
        })
        return EXIT_OK if rep.always_connected else EXIT_VIOLATION
    if args.ordering is not None:
        values = [int(x) for x in args.ordering.split(",") if x.strip()]
        pi = gp.Ordering.from_values(values)
    else:
        pi = gp.random_ordering(g.n, args.seed)
    h = gp.good_pair_graph(g, pi)
    connected = is_connected(h)
    _emit(args, {
        "ordering": str(pi),
        "edges": [f"{u}-{v}" for u, v in h.edges()],
        "m": h.m,
        "connected": connected,
        "tree": connected and find_cycle(h) is None,
    })
    if args.dot:
        Path(args.dot).write_text(to_dot(g, h.edges()))
    return EXIT_OK if connected else EXIT_VIOLATION


def cmd_expectation(args) -> int:
    g = _load(args.file)
    rep = gp.sample_good_edge_count(g, args.trials, args.seed)
    _emit(args, rep)
    return EXIT_OK


def cmd_resistance(args) -> int:
    g = _load(args.file)
    backend = "floating" if args.float else "exact" if args.exact else None
    forster = el.forster_check(g, backend)
    bounds = el.check_bound_eq1(g)
    payload = {
        "backend": forster.backend,
        "forster": {
            "total": forster.total,
            "expected_total": forster.expected_total,
            "residual": forster.residual,
            "holds": forster.holds,
        },
        "edges": [
            {
                "edge": f"{row.edge[0]}-{row.edge[1]}",
                "R": forster.per_edge[row.edge],
                "bound": row.bound,
                "strict": row.strict,
            }
            for row in bounds.per_edge
        ],
        "all_hold": bounds.all_hold,
        "any_strict": bounds.any_strict,
        "block_graph": bounds.block_graph,
    }
    ok = forster.holds and bounds.all_hold
    if args.ell is not None:
        rows = []
        for u, v in g.edges():
            b = el.theorem3_resistance_bound(g, u, v, args.ell, args.path_cap)
            rows.append({"edge": f"{u}-{v}", "P": b.packing, "R": b.resistance, "bound": b.bound, "holds": b.holds})
            ok = ok and b.holds
        payload["theorem3"] = {"ell": args.ell, "edges": rows}
    _emit(args, payload)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_witness(args) -> int:
    g = _load(args.file)
    w = gp.cycle_witness_ordering(g)
    if w is None:
        if args.json:
            _emit(args, {"witness": None})
        else:
            print("block graph: no witness exists")
        return EXIT_OK
    _emit(args, {
        "ordering": str(w.ordering),
        "triple": list(w.triple),
        "path": list(w.path),
        "cycle": list(w.cycle),
    })
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(args.model, args.n or 0, args.p, args.blocks, args.max_clique, args.seed)
    text = to_edge_list(gen_graph(spec))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def fuzz_models(model: str, n: int, p: float, blocks: int, max_clique: int) -> list[GenSpec]:
    """Round-robin generator specs: sizes 1..n, or 1..blocks blocks for block graphs."""
    if model == "block_graph":
        return [GenSpec(model, blocks=b, max_clique=max_clique) for b in range(1, blocks + 1)]
    return [GenSpec(model, n=k, p=p) for k in range(1, n + 1)]


def cmd_fuzz(args) -> int:
    props = [p.strip() for p in args.props.split(",") if p.strip()]
    models = fuzz_models(args.model, args.n, args.p, args.blocks, args.max_clique)
    rep = fuzz_run(models, args.trials, props, args.seed)
    payload = rep.as_dict(include_elapsed=not args.no_elapsed)
    payload["properties"] = props
    payload["model"] = args.model
    _emit(args, payload)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cnineq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", help="JSON instead of key: value text")
        p.set_defaults(func=func)
        return p

    p = graph_cmd("verify", cmd_verify, "check the common-neighbour inequality and its equality case")
    p.add_argument("--ell", type=int, help="also check the detour-packing generalization")
    p.add_argument("--path-cap", type=int, default=iq.DEFAULT_PATH_CAP)

    p = graph_cmd("good-pairs", cmd_good_pairs, "build the good-pair subgraph for an ordering")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--ordering", help="comma-separated distinct values, one per vertex")
    mode.add_argument("--seed", type=int, help="uniform random ordering from this seed")
    mode.add_argument("--all", action="store_true", help="check every ordering")
    p.add_argument("--dot", help="write DOT with the good-pair edges highlighted")
    p.add_argument("--n-limit", type=int, default=gp.DEFAULT_ORDERING_LIMIT)

    p = graph_cmd("expectation", cmd_expectation, "exact vs Monte Carlo expected good-pair edge count")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = graph_cmd("resistance", cmd_resistance, "edge resistances, Forster sum and resistance bounds")
    backend = p.add_mutually_exclusive_group()
    backend.add_argument("--exact", action="store_true")
    backend.add_argument("--float", action="store_true")
    p.add_argument("--ell", type=int)
    p.add_argument("--path-cap", type=int, default=iq.DEFAULT_PATH_CAP)

    graph_cmd("witness", cmd_witness, "ordering whose good-pair subgraph has a cycle")

    p = sub.add_parser("gen", help="generate a random connected graph")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--blocks", type=int, default=3)
    p.add_argument("--max-clique", type=int, default=4)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="run registered properties on random graphs")
    p.add_argument("--props", required=True, help=f"comma-separated subset of: {', '.join(PROPERTIES)}")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=8, help="largest graph size (sizes cycle through 1..n)")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--blocks", type=int, default=4, help="largest block count for block_graph")
    p.add_argument("--max-clique", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-elapsed", action="store_true", help="omit timing for byte-identical reruns")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except AssertionError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (CnineqError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
