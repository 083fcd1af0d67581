"""Command-line entry point.

JSON goes to stdout, a one-line human summary to stderr. Exit codes:
0 ok, 1 bound violated, 2 usage/parse/infeasible, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import analysis
from .graph import Graph, GraphError
from .graphio import ParseError, parse_graph, serialize_graph
from .greedy import GreedyTrace, SequenceError, SequenceSpec, derive_h_sequence, iterative_split
from .instances import GenerationError, RandomGraphConfig, make_random_graph, make_tight_instance
from .solvers import InfeasibleError, SizeLimitError, TieBreak, min_split_dp

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3

POLICIES = {"lex": TieBreak.CANONICAL_LEX, "avoid-last": TieBreak.AVOID_LAST_COMPONENT}


@dataclass
class RatioReport:
    algorithm: str
    k: int
    sequence: list[int]
    achieved_weight: Fraction
    theoretical_bound: Fraction
    optimal_weight: Fraction | None = None
    cut_edge_ids: list[int] = field(default_factory=list)
    trace: list[dict] = field(default_factory=list)
    runtime_ms: int = 0

    @property
    def achieved_ratio(self) -> Fraction | None:
        if self.optimal_weight is None:
            return None
        return self.achieved_weight / self.optimal_weight

    def within_bound(self) -> bool:
        ratio = self.achieved_ratio
        return ratio is None or ratio <= self.theoretical_bound

    def to_dict(self) -> dict:
        opt, ratio = self.optimal_weight, self.achieved_ratio
        return {
            "algorithm": self.algorithm,
            "k": self.k,
            "sequence": self.sequence,
            "achieved_weight": str(self.achieved_weight),
            "optimal_weight": None if opt is None else str(opt),
            "theoretical_bound": str(self.theoretical_bound),
            "achieved_ratio": None if ratio is None else str(ratio),
            "cut_edge_ids": self.cut_edge_ids,
            "trace": self.trace,
            "runtime_ms": self.runtime_ms,
        }


def _trace_rows(trace: GreedyTrace) -> list[dict]:
    return [
        {
            "h": s.h,
            "weight": str(s.split.weight),
            "edge_ids": s.split.sorted_ids(),
            "components_after": s.component_count_after,
        }
        for s in trace.steps
    ]


def _load(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph(Path(path).read_text())


def _spec(args: argparse.Namespace) -> SequenceSpec:
    if args.sequence is not None:
        hs = tuple(int(t) for t in args.sequence.split(","))
        k = args.k if args.k is not None else 1 + sum(h - 1 for h in hs)
        return SequenceSpec(k, hs)
    if args.k is None:
        raise SequenceError("--k is required with --h")
    return derive_h_sequence(args.k, args.h)


def _emit(payload: object, summary: str) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def run_solve(args: argparse.Namespace, with_optimum: bool = False) -> RatioReport:
    g = _load(args.input)
    spec = _spec(args)
    start = time.perf_counter()
    trace = iterative_split(g, spec, POLICIES[args.policy])
    opt = min_split_dp(g, spec.k).weight if with_optimum else None
    return RatioReport(
        algorithm="iterative-split",
        k=spec.k,
        sequence=list(spec.hs),
        achieved_weight=trace.total_weight,
        theoretical_bound=analysis.theoretical_ratio(spec),
        optimal_weight=opt,
        cut_edge_ids=sorted(trace.cut_edge_ids),
        trace=_trace_rows(trace),
        runtime_ms=int((time.perf_counter() - start) * 1000),
    )


def run_exact(args: argparse.Namespace) -> RatioReport:
    g = _load(args.input)
    start = time.perf_counter()
    res = min_split_dp(g, args.k)
    return RatioReport(
        algorithm="exact",
        k=args.k,
        sequence=[args.k],
        achieved_weight=res.weight,
        theoretical_bound=Fraction(1),
        optimal_weight=res.weight,
        cut_edge_ids=res.sorted_ids(),
        runtime_ms=int((time.perf_counter() - start) * 1000),
    )


def run_verify(args: argparse.Namespace) -> RatioReport:
    return run_solve(args, with_optimum=True)


def run_gen(args: argparse.Namespace) -> tuple[str, dict]:
    if args.family == "tight":
        inst = make_tight_instance(_spec(args), star_closed=not args.raw)
        meta = {
            "family": "tight",
            "k": inst.spec.k,
            "sequence": list(inst.spec.hs),
            "star_closed": inst.star_closed,
            "heavy_weight": str(inst.heavy_weight),
            "optimal_weight": str(inst.optimal_weight),
            "optimal_cut_edge_ids": sorted(inst.optimal_cut_edge_ids),
            "adversarial_split_edge_ids": [sorted(s) for s in inst.adversarial_split_edge_ids],
            "theoretical_ratio": str(analysis.theoretical_ratio(inst.spec)),
        }
        comment = f"tight instance k={inst.spec.k} sequence={','.join(map(str, inst.spec.hs))}"
        return serialize_graph(inst.graph, comment), meta
    cfg = RandomGraphConfig(
        n=args.n,
        edge_probability=Fraction(args.p),
        weight_range=(args.wmin, args.wmax),
        seed=args.seed,
    )
    g = make_random_graph(cfg)
    meta = {"family": "random", "n": cfg.n, "p": str(cfg.edge_probability),
            "weight_range": list(cfg.weight_range), "seed": cfg.seed, "m": g.m}
    return serialize_graph(g, f"random n={cfg.n} p={cfg.edge_probability} seed={cfg.seed}"), meta


def run_facts(args: argparse.Namespace) -> list[analysis.FactReport]:
    return analysis.verify_facts(args.kmax, args.qmax)


def run_ratio(args: argparse.Namespace) -> Fraction:
    if args.sequence is None and args.h is not None and args.k is not None:
        return analysis.h_split_ratio(args.k, args.h)
    return analysis.theoretical_ratio(_spec(args))


def _add_plan(p: argparse.ArgumentParser, k_required: bool = False) -> None:
    p.add_argument("--k", type=int, required=k_required)
    plan = p.add_mutually_exclusive_group(required=True)
    plan.add_argument("--h", type=int, help="uniform split size (iterative-h-split)")
    plan.add_argument("--sequence", help="comma-separated nondecreasing plan, e.g. 2,4,4")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kwaycut", description="Greedy k-way cut approximation")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("solve", "run greedy splitting"), ("verify", "greedy vs exact optimum")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", required=True)
        _add_plan(p)
        p.add_argument("--policy", choices=sorted(POLICIES), default="lex")

    p = sub.add_parser("exact", help="exact minimum k-way split")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("gen", help="write an instance in edge-list format")
    gen = p.add_subparsers(dest="family", required=True)
    t = gen.add_parser("tight")
    _add_plan(t)
    t.add_argument("--raw", action="store_true", help="omit the connecting hub vertex")
    t.add_argument("--output")
    r = gen.add_parser("random")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--p", default="1/2", help="edge probability, e.g. 1/2")
    r.add_argument("--wmin", type=int, default=1)
    r.add_argument("--wmax", type=int, default=10)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--output")

    p = sub.add_parser("facts", help="sweep the f(k,h) inequalities")
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--qmax", type=int, default=4)

    p = sub.add_parser("ratio", help="approximation ratio of a split plan")
    _add_plan(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("solve", "verify"):
            report = run_verify(args) if args.command == "verify" else run_solve(args)
            ok = report.within_bound()
            _emit(report.to_dict(),
                  f"{report.algorithm}: weight {report.achieved_weight}, bound {report.theoretical_bound}"
                  + ("" if report.optimal_weight is None
                     else f", ratio {report.achieved_ratio} ({'ok' if ok else 'VIOLATION'})"))
            return EXIT_OK if ok else EXIT_VIOLATION
        if args.command == "exact":
            report = run_exact(args)
            _emit(report.to_dict(), f"exact minimum {args.k}-way split: {report.achieved_weight}")
            return EXIT_OK
        if args.command == "gen":
            text, meta = run_gen(args)
            if args.output:
                Path(args.output).write_text(text)
                _emit(meta, f"wrote {args.output}")
            else:
                sys.stdout.write(text)
                print(json.dumps(meta), file=sys.stderr)
            return EXIT_OK
        if args.command == "facts":
            reports = run_facts(args)
            bad = sum(len(r.violations) for r in reports)
            _emit([r.to_dict() for r in reports],
                  f"{len(reports)} reports, {sum(r.checked for r in reports)} checks, {bad} violations")
            return EXIT_OK if bad == 0 else EXIT_VIOLATION
        if args.command == "ratio":
            value = run_ratio(args)
            _emit(str(value), f"ratio {value}")
            return EXIT_OK
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ParseError, GraphError, SequenceError, InfeasibleError, GenerationError,
            analysis.DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
