"""Command-line interface.

Subcommands: generate, analyze, oracle, verify, regularity.  Machine
output is JSON on stdout (sorted keys, compact separators, so identical
inputs and seeds produce byte-identical bytes); human-readable tables
go to stderr under --verbose.  Exit codes: 0 success, 1 verification or
guarantee failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from k4cut.cuts import bipartize
from k4cut.errors import InputError, TheoremViolation
from k4cut.generators import (
    blowup,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    petersen_graph,
    random_gnp,
    random_k4free_process,
    random_regular,
    random_tripartite,
)
from k4cut.graph import Graph, format_edge_list, parse_edge_list
from k4cut.oracle import DEFAULT_LIMIT, exact_max_cut
from k4cut.regularity import Partition, hfree_bipartize
from k4cut.suites import SUITE_NAMES, SuiteConfig, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        with open(path, encoding="ascii") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _named_base(name: str) -> Graph:
    if name == "petersen":
        return petersen_graph()
    if name.startswith("c") and name[1:].isdigit():
        return cycle_graph(int(name[1:]))
    if name.startswith("k") and name[1:].isdigit():
        return complete_graph(int(name[1:]))
    raise InputError(f"unknown blowup base {name!r} (use cN, kN or petersen)")


def _cmd_generate(args) -> int:
    fam = args.family
    prm = args.params
    try:
        if fam == "complete_multipartite":
            g = complete_multipartite([int(x) for x in prm])
        elif fam == "blowup":
            if len(prm) != 2:
                raise InputError("blowup takes <base> <t>")
            g = blowup(_named_base(prm[0]), int(prm[1]))
        elif fam == "random_tripartite":
            if len(prm) != 2:
                raise InputError("random_tripartite takes <n> <p>")
            g = random_tripartite(int(prm[0]), float(prm[1]), args.seed)
        elif fam == "random_k4free_process":
            if len(prm) not in (1, 2):
                raise InputError("random_k4free_process takes <n> [target_edges]")
            target = int(prm[1]) if len(prm) == 2 else None
            g = random_k4free_process(int(prm[0]), args.seed, target)
        elif fam == "random_gnp":
            if len(prm) != 2:
                raise InputError("random_gnp takes <n> <p>")
            g = random_gnp(int(prm[0]), float(prm[1]), args.seed)
        elif fam == "random_regular":
            if len(prm) != 2:
                raise InputError("random_regular takes <n> <d>")
            g = random_regular(int(prm[0]), int(prm[1]), args.seed)
        else:
            raise InputError(f"unknown family {fam!r}")
    except ValueError as exc:
        raise InputError(f"bad parameters for {fam}: {exc}") from exc
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    g = _read_graph(args.input)
    cert, report = bipartize(g)
    if args.json:
        merged = report.to_dict()
        cert_dict = cert.to_dict()
        merged["deletion_edges"] = cert_dict["deletion_edges"]
        merged["method"] = cert_dict["method"]
        merged["claimed_bound"] = cert_dict["claimed_bound"]
        sys.stdout.write(_dump(merged))
    else:
        sys.stdout.write(
            f"n={report.n} e={report.e} m={report.m} "
            f"method={report.best_method} deletions={report.deletions} "
            f"extremal={'yes' if report.extremal_flag else 'no'}\n"
        )
    if args.verbose:
        for key, value in sorted(report.bounds.items()):
            print(f"bound {key}: {value}", file=sys.stderr)
        for key, value in sorted(report.cuts.items()):
            print(f"cut {key}: {value}", file=sys.stderr)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _read_graph(args.input)
    result = exact_max_cut(g, limit=args.limit)
    sys.stdout.write(_dump(result.to_dict()))
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        suite=args.suite,
        trials=args.trials,
        seed=args.seed,
        n_min=args.n_min,
        n_max=args.n_max,
        oracle_limit=args.oracle_limit,
        sweep_max_n=args.max_n,
    )
    report = run_suite(cfg)
    sys.stdout.write(_dump(report))
    if args.verbose:
        print(
            f"suite={report['suite']} checks={report['checks_run']} "
            f"failures={len(report['failures'])}",
            file=sys.stderr,
        )
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _cmd_regularity(args) -> int:
    g = _read_graph(args.input)
    if args.partition == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.partition, encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.partition}: {exc}") from exc
    part = Partition.from_json(text)
    cert, report = hfree_bipartize(
        g, part, mode=args.mode, samples=args.samples, seed=args.seed
    )
    sys.stdout.write(
        _dump({"certificate": cert.to_dict(), "report": report.to_dict()})
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k4cut",
        description="Max-cut bounds and n^2/9 bipartization certificates "
        "for K4-free graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph in edge-list format")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("analyze", help="bipartize a K4-free graph")
    p.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("oracle", help="exact max cut by enumeration")
    p.add_argument("--input", required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--oracle-limit", type=int, default=20)
    p.add_argument("--max-n", type=int, default=6, help="largest sweep size")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("regularity", help="partition-based bipartization")
    p.add_argument("--input", required=True)
    p.add_argument("--partition", required=True, help="partition JSON file")
    p.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_regularity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"guarantee violated: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
