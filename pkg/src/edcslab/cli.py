"""edcslab command line.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bench import GraphSpec, SweepConfig, cmd_bench, row_ok
from .comm import run_protocol, split_edges
from .edcs import EdcsParams, construct_edcs, params_for_epsilon, verify_edcs
from .gallai_edmonds import decompose, mark_specials, verify_ge_properties
from .graph import FAMILIES, GeneratorConfig, GraphFormatError, format_graph, generate, load_graph, save_graph
from .matching import format_matching, maximum_matching, parse_matching
from .prooflab import FAIL, LemmaViolation, verify_trace

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _params(args: argparse.Namespace) -> EdcsParams:
    if args.beta is not None or args.beta_minus is not None:
        if args.beta is None or args.beta_minus is None:
            raise UsageError("--beta and --beta-minus go together")
        return EdcsParams(args.beta, args.beta_minus)
    if args.epsilon is None:
        raise UsageError("give --epsilon or --beta/--beta-minus")
    return params_for_epsilon(args.epsilon)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        print(text, end="")


def cmd_generate(args: argparse.Namespace) -> int:
    g = generate(GeneratorConfig(args.family, args.n, args.m, args.p, args.seed))
    _emit(format_graph(g), args.out)
    return EXIT_OK


def cmd_match(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    _emit(format_matching(maximum_matching(g, args.seed)), args.out)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    h = construct_edcs(g, _params(args), args.seed)
    save_graph(h, args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, h = load_graph(args.graph), load_graph(args.edcs)
    if not h.is_subgraph_of(g):
        raise UsageError("the EDCS file is not a subgraph of the graph")
    report = verify_edcs(g, h, _params(args))
    for (u, v), d in report.p1_violations:
        print(f"P1 {u} {v} edge_degree={d}")
    for (u, v), d in report.p2_violations:
        print(f"P2 {u} {v} edge_degree={d}")
    print("EDCS OK" if report.ok else f"EDCS FAIL ({len(report.p1_violations)} P1, {len(report.p2_violations)} P2)")
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_decompose(args: argparse.Namespace) -> int:
    h = load_graph(args.graph)
    if args.matching:
        m = parse_matching(Path(args.matching).read_text())
        m.check_in(h)
        if m.size != maximum_matching(h).size:
            raise UsageError("the supplied matching is not maximum")
    else:
        m = maximum_matching(h, args.seed)
    ge = decompose(h, m)
    report = verify_ge_properties(ge, h, m)
    print("D: " + " ".join(map(str, sorted(ge.d_set))))
    print("A: " + " ".join(map(str, sorted(ge.a_set))))
    print("C: " + " ".join(map(str, sorted(ge.c_set))))
    if not report.ok:
        for f in report.failures:
            print(f"FAIL {f}")
        return EXIT_CHECK
    ge = mark_specials(ge, h, m)
    for i, (comp, s) in enumerate(zip(ge.d_components, ge.specials)):
        print(f"component {i}: {' '.join(map(str, comp))} special={s}")
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    params = _params(args)
    if args.epsilon is None:
        raise UsageError("trace-proof needs --epsilon")
    h = load_graph(args.edcs) if args.edcs else construct_edcs(g, params, args.seed or 0)
    try:
        trace = verify_trace(g, h, args.epsilon, params, args.seed)
    except LemmaViolation as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CHECK
    if args.json:
        print(json.dumps(trace.to_dict(), indent=2))
    else:
        print("\n".join(trace.lines()))
    return EXIT_OK if all(c.status != FAIL for c in trace.checks) else EXIT_CHECK


def cmd_comm(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    res = run_protocol(split_edges(g, args.mode, args.seed, args.epsilon, args.overlap))
    if args.json:
        print(json.dumps({
            "message_edges": res.message_edge_count, "mu_out": res.mu_output, "mu_g": res.mu_g,
            "ratio": str(res.ratio), "threshold": str(res.threshold), "passed": res.passed,
        }))
    else:
        print(res.line())
    return EXIT_OK if res.passed else EXIT_CHECK


def cmd_bench_args(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        graphs=[GraphSpec.parse(s) for s in args.graph],
        epsilons=args.epsilon,
        seeds=list(range(args.seed, args.seed + args.seeds)),
        out=Path(args.out) if args.out else None,
        trace=not args.no_trace,
    )
    rows = cmd_bench(cfg)
    return EXIT_OK if all(row_ok(r) for r in rows) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edcslab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")

    def params_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--epsilon", type=str, help="decimal in (0, 1]; picks (beta, beta-minus)")
        p.add_argument("--beta", type=int)
        p.add_argument("--beta-minus", type=int)

    p = sub.add_parser("generate", help="write a generated graph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("match", help="write a maximum matching")
    p.add_argument("graph")
    p.add_argument("--seed", type=_u64)
    p.add_argument("--out")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("construct-edcs", help="build an EDCS by local fixing")
    params_flags(p)
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("graph")
    p.add_argument("output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify-edcs", help="check P1/P2 of an EDCS")
    params_flags(p)
    p.add_argument("graph")
    p.add_argument("edcs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="Gallai-Edmonds partition with special vertices")
    p.add_argument("graph")
    p.add_argument("--matching", help="maximum matching file to mark specials against")
    p.add_argument("--seed", type=_u64)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("trace-proof", help="evaluate every inequality of the argument")
    params_flags(p)
    p.add_argument("--seed", type=_u64)
    p.add_argument("--edcs", help="use this EDCS instead of constructing one")
    p.add_argument("--json", action="store_true")
    p.add_argument("graph")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("simulate-comm", help="run the one-way EDCS protocol")
    p.add_argument("--epsilon", type=str, required=True)
    p.add_argument("--mode", choices=("random", "adversarial-bipartition"), default="random")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--overlap", type=float, default=0.05)
    p.add_argument("--json", action="store_true")
    p.add_argument("graph")
    p.set_defaults(func=cmd_comm)

    p = sub.add_parser("bench", help="sweep graphs x epsilons x seeds into CSV")
    p.add_argument("--graph", action="append", required=True, help="e.g. gnm-random:n=300,p=0.5")
    p.add_argument("--epsilon", action="append", required=True)
    p.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds")
    p.add_argument("--seed", type=_u64, default=0, help="first seed")
    p.add_argument("--no-trace", action="store_true", help="skip the proof trace column")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench_args)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command is None:
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"edcslab {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
