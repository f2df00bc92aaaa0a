"""Command-line interface.

Exit codes are the machine contract: 0 feasible/pass, 1 infeasible or a
failed check or a violation found, 2 usage or input error, 3 undecided at
this scale.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families
from .discharge import discharge
from .errors import GraphFormatError, UndecidedAtScaleError
from .factor import brute_force_f_factor, decompose_system, degree_spec_from_terminals, solve
from .graphs import Graph, parse_graph, parse_terminals
from .tutte import (
    evaluate_pair,
    format_certificate,
    parse_certificate,
    search_certificate,
)
from .verify import (
    PropertyReport,
    check_regular,
    check_terminal_set,
    edge_connectivity,
    find_induced_star,
    path_system_criterion,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


def _read_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text())


def _read_terminals(path: str, g: Graph) -> tuple[int, ...]:
    return parse_terminals(Path(path).read_text(), g)


def _parse_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    w = _read_terminals(args.terminals, g)
    system = solve(g, w)
    if system is None:
        print("INFEASIBLE")
        return EXIT_VIOLATION
    sys.stdout.write(system.format())
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    w = _read_terminals(args.terminals, g)
    f = degree_spec_from_terminals(g, w)
    factor = brute_force_f_factor(g, f, max_edges=args.max_edges)
    if factor is None:
        print("INFEASIBLE")
        return EXIT_VIOLATION
    sys.stdout.write(decompose_system(factor, w).format())
    return EXIT_OK


def _cmd_certify(args) -> int:
    g = _read_graph(args.graph)
    w = _read_terminals(args.terminals, g)
    f = degree_spec_from_terminals(g, w)
    if args.exhaustive:
        cert = search_certificate(g, f, max_vertices=args.max_vertices, jobs=args.jobs)
        if cert is None:
            print("NO-CERTIFICATE")
            return EXIT_OK
        sys.stdout.write(format_certificate(cert))
        return EXIT_VIOLATION
    if args.witness is not None:
        stored = parse_certificate(Path(args.witness).read_text())
        cert = evaluate_pair(g, f, stored.s, stored.t)
        sys.stdout.write(format_certificate(cert))
        if cert.delta != stored.delta:
            print(
                f"witness file claims delta {stored.delta}, recomputed {cert.delta}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        return EXIT_VIOLATION if cert.delta < 0 else EXIT_OK
    if args.s is None or args.t is None:
        print("certify needs --exhaustive, --witness FILE, or --s/--t", file=sys.stderr)
        return EXIT_USAGE
    cert = evaluate_pair(g, f, _parse_list(args.s), _parse_list(args.t))
    sys.stdout.write(format_certificate(cert))
    return EXIT_VIOLATION if cert.delta < 0 else EXIT_OK


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    reports: list[PropertyReport] = []
    if args.regular is not None:
        reports.append(check_regular(g, args.regular))
    if args.edge_connectivity is not None:
        lam, cut = edge_connectivity(g)
        reports.append(
            PropertyReport(
                "edge-connectivity",
                lam >= args.edge_connectivity,
                witness=(lam, cut) if lam < args.edge_connectivity else None,
                detail=f"computed {lam}, required >= {args.edge_connectivity}",
            )
        )
    if args.star_free is not None:
        star = find_induced_star(g, args.star_free)
        reports.append(
            PropertyReport(
                f"star-free-{args.star_free}", star is None, witness=star,
            )
        )
    if args.terminals is not None:
        if args.mode is None:
            print("--terminals requires --mode distance3|nbhd1", file=sys.stderr)
            return EXIT_USAGE
        w = _read_terminals(args.terminals, g)
        reports.append(check_terminal_set(g, w, args.mode))
    if args.path_system_criterion:
        reports.append(path_system_criterion(g))
    if not reports:
        print("verify: no checks requested", file=sys.stderr)
        return EXIT_USAGE
    for rep in reports:
        print(rep.format_line())
    if any(rep.holds is False for rep in reports):
        return EXIT_VIOLATION
    if any(rep.holds is None for rep in reports):
        return EXIT_UNDECIDED
    return EXIT_OK


def _cmd_generate(args) -> int:
    fam = args.family
    need = {
        "prop1-odd": ("r", "k"),
        "prop1-even": ("r", "k"),
        "prop1-bipartite": ("r", "n"),
        "prop2-r4": ("n",),
        "prop2-general": ("r", "m"),
        "prop2-r5": ("m",),
        "random": ("r", "n", "seed"),
    }
    if fam not in need:
        print(f"unknown family {fam!r}", file=sys.stderr)
        return EXIT_USAGE
    missing = [flag for flag in need[fam] if getattr(args, flag) is None]
    if missing:
        print(
            f"family {fam} requires --" + ", --".join(missing), file=sys.stderr
        )
        return EXIT_USAGE
    if fam == "prop1-odd":
        inst = families.gen_prop1_odd(args.r, args.k)
    elif fam == "prop1-even":
        inst = families.gen_prop1_even(args.r, args.k)
    elif fam == "prop1-bipartite":
        inst = families.gen_prop1_bipartite(args.r, args.n)
    elif fam == "prop2-r4":
        inst = families.gen_prop2_r4(args.n)
    elif fam == "prop2-general":
        inst = families.gen_prop2_general(args.r, args.m)
    elif fam == "prop2-r5":
        inst = families.gen_prop2_r5(args.m)
    else:
        inst = families.random_valid_instance(args.r, args.n, args.seed)
    for path in families.write_instance(inst, args.out):
        print(path)
    return EXIT_OK


def _cmd_discharge(args) -> int:
    g = _read_graph(args.graph)
    w = _read_terminals(args.terminals, g)
    report = discharge(g, w, _parse_list(args.s), _parse_list(args.t), args.r)
    sys.stdout.write(report.format())
    ok = (
        report.conservation_ok
        and report.identity_ok
        and report.delta_consistent
        and report.all_bounds_hold
    )
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcycle",
        description="Spanning path-cycle systems: solve, verify, certify, generate",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a spanning path-cycle system")
    p.add_argument("--graph", required=True)
    p.add_argument("--terminals", required=True)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive f-factor search (small inputs)")
    p.add_argument("--graph", required=True)
    p.add_argument("--terminals", required=True)
    p.add_argument("--max-edges", type=int, default=24)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("certify", help="evaluate or search deficiency certificates")
    p.add_argument("--graph", required=True)
    p.add_argument("--terminals", required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--witness")
    p.add_argument("--s")
    p.add_argument("--t")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=14)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("verify", help="structural property checks")
    p.add_argument("--graph", required=True)
    p.add_argument("--regular", type=int)
    p.add_argument("--edge-connectivity", type=int)
    p.add_argument("--star-free", type=int)
    p.add_argument("--terminals")
    p.add_argument("--mode", choices=("distance3", "nbhd1"))
    p.add_argument("--path-system-criterion", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit a family instance as files")
    p.add_argument("--family", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("discharge", help="run the charge-redistribution verifier")
    p.add_argument("--graph", required=True)
    p.add_argument("--terminals", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_discharge)
    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UndecidedAtScaleError as exc:
        print(f"undecided at this scale: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
