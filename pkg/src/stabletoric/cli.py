"""Batch command line front-end: analyze graphs, generate family instances,
and run the verification suites.  Exit codes: 0 pass, 1 analysis/suite
failure, 2 usage or parse errors."""

from __future__ import annotations

import argparse
import sys

from .analysis import RunConfig, analyze_graph, render_report
from .graphs import GraphFormatError, SimpleGraph, family, format_graph, parse_graph
from .verify import SUITES, run_suite


def parse_family_spec(spec: str) -> SimpleGraph:
    """Parse 'name(p1,p2,...)' into a family instance; bare 'name' means no
    parameters.  random_alpha2 takes (n, seed) with the default edge probability."""
    spec = spec.strip()
    if "(" in spec:
        name, _, rest = spec.partition("(")
        if not rest.endswith(")"):
            raise ValueError(f"malformed family spec {spec!r}")
        args = [a.strip() for a in rest[:-1].split(",") if a.strip()]
    else:
        name, args = spec, []
    name = name.strip()
    params = [int(a) for a in args]
    if name == "random_alpha2":
        n = params[0]
        seed = params[1] if len(params) > 1 else 0
        return family(name, n, seed=seed)
    return family(name, *params)


def _load_graph(cfg: RunConfig):
    if cfg.input_path:
        with open(cfg.input_path, encoding="utf-8") as fh:
            g = parse_graph(fh.read())
        if not isinstance(g, SimpleGraph):
            raise GraphFormatError("analysis needs a simple graph (no loops)")
        return g
    if cfg.family_spec:
        return parse_family_spec(cfg.family_spec)
    raise ValueError("provide --input or --family")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    cfg = RunConfig(input_path=args.input, family_spec=args.family, dmax=args.dmax,
                    walk_bound=args.walk_bound, order=args.order, budget=args.budget,
                    seed=args.seed, fmt=args.format, out=args.out)
    g = _load_graph(cfg)
    report = analyze_graph(g, dmax=cfg.dmax, order=cfg.order,
                           budget=cfg.budget, seed=cfg.seed)
    _emit(render_report(report, cfg.fmt), cfg.out)
    return 0


def cmd_family(args) -> int:
    spec = args.name + ("(" + ",".join(args.params) + ")" if args.params else "")
    g = parse_family_spec(spec)
    _emit(format_graph(g), args.out)
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "unimodularity":
        kwargs["n"] = args.n if args.n is not None else 5
    elif args.suite in ("generators",):
        kwargs["max_n"] = args.n if args.n is not None else 6
    elif args.suite == "normality":
        kwargs["max_n"] = args.n if args.n is not None else 7
        kwargs["dmax"] = args.dmax if args.dmax is not None else 8
    elif args.suite == "keylemma":
        kwargs["max_n"] = args.n if args.n is not None else 5
    elif args.suite == "mu":
        if args.cycles:
            kwargs["cycles"] = tuple(int(c) for c in args.cycles.split(","))
    elif args.suite == "cliquesum":
        kwargs["pairs"] = args.pairs
        kwargs["seed"] = args.seed
        kwargs["dmax"] = args.dmax if args.dmax is not None else 6
    elif args.suite == "walks":
        kwargs["max_n"] = args.n if args.n is not None else 6
    result = run_suite(args.suite, **kwargs)
    for line in result.lines:
        print(line)
    print(result.summary())
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabletoric",
        description="Exact cross-validation of stable set polytope criteria "
                    "against toric-ideal oracles.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one graph")
    p.add_argument("--input", help="graph file in the p/e/l text format")
    p.add_argument("--family", help="family spec, e.g. 'two_odd_holes(2,2)'")
    p.add_argument("--dmax", type=int, default=None, help="normality budget (default n+1)")
    p.add_argument("--walk-bound", type=int, default=None, help="walk length bound")
    p.add_argument("--order", default="grevlex", help="monomial order descriptor")
    p.add_argument("--budget", type=int, default=20, help="quadratic search budget")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="write a named family instance as a graph file")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int, default=None, help="vertex count / sweep bound")
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--cycles", default=None, help="comma list for the mu suite")
    p.add_argument("--pairs", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
