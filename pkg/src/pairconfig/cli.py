"""Command-line front end.

Exit codes: 0 when an answer was computed (including negative answers),
1 when the input falls outside the hypotheses or a check fails, 2 on I/O
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from collections import Counter
from typing import Sequence, TextIO

from . import counterexamples as cx
from .graph import (
    Graph,
    GraphError,
    PointSet,
    components,
    detect_exceptional,
    format_edge_list,
    format_point_set,
    generate_rdisk,
    induced,
    induced_star,
    is_connected,
    max_degree,
    min_degree,
    parse_edge_list,
    parse_point_set,
)
from .labeling import (
    Configuration,
    LabelingError,
    LabelPair,
    config_to_json,
    format_config,
    parse_config,
    r_size,
    verify,
    verify_r_configuration,
)
from .lemmas import ReductionTrace
from .oracle import MAX_ENUMERATION_ORDER, OracleBudget, Outcome, enumerate_small_graphs, exact_solve
from .results import SolverError, Status
from .solver import check_hypotheses, make_r_configuration, solve

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_IO = 2

_STATUS_WORD = {
    Status.CONFIGURED: "ok",
    Status.EXCEPTIONAL: "exceptional",
    Status.PRECONDITION_FAILED: "precondition-failed",
}


class InputError(Exception):
    """Unreadable or malformed input; maps to exit code 2."""


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    try:
        return parse_edge_list(_read(path))
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_config(path: str) -> Configuration:
    text = _read(path)
    stripped = text.strip()
    try:
        if stripped.startswith("{"):
            raw = json.loads(stripped)
            if "components" in raw:
                merged: Configuration = {}
                for comp in raw["components"]:
                    for v, p in comp.get("labels", {}).items():
                        merged[int(v)] = LabelPair.of(p)
                return merged
            return parse_config(stripped)
        # the solver's text report interleaves comment lines
        body = "\n".join("" if ln.lstrip().startswith("#") else ln for ln in text.splitlines())
        return parse_config(body)
    except (LabelingError, json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


class Reporter:
    def __init__(self, as_json: bool, out: TextIO) -> None:
        self.as_json = as_json
        self.out = out
        self.start = time.perf_counter()

    def elapsed_ms(self) -> float:
        return round((time.perf_counter() - self.start) * 1000, 3)

    def emit(self, payload: dict, text_lines: Sequence[str], body: str = "") -> None:
        if self.as_json:
            payload = {**payload, "timing_ms": self.elapsed_ms()}
            self.out.write(json.dumps(payload, sort_keys=False) + "\n")
            return
        for line in text_lines:
            self.out.write(f"# {line}\n")
        self.out.write(body)
        self.out.write(f"# timing_ms: {self.elapsed_ms()}\n")


# ---------------------------------------------------------------------------
# Commands


def cmd_solve(args: argparse.Namespace, rep: Reporter) -> int:
    g = _load_graph(args.graph)
    trace = ReductionTrace()
    result = solve(g, trace)
    if args.verbose:
        for line in trace.lines():
            print(line, file=sys.stderr)
    f = result.configuration
    # never print a configuration that does not check out
    configured = [c for c in result.components if c.status is Status.CONFIGURED]
    for comp in configured:
        sub, old = induced(g, comp.vertices)
        if verify(sub, {i: f[v] for i, v in enumerate(old)}):
            raise SolverError("configuration failed re-verification")
    status = _STATUS_WORD[result.status]
    lines = [f"status: {status}"]
    for i, c in enumerate(result.components):
        desc = c.status.value
        if c.kind is not None:
            desc += f" {c.kind.value}"
        if c.reason is not None:
            desc += f" ({c.reason}; witness {' '.join(map(str, c.witness))})"
        lines.append(f"component {i} [{len(c.vertices)} vertices]: {desc}")
    rep.emit(
        {"status": status, "components": [c.to_json(f) for c in result.components]},
        lines,
        format_config({v: f[v] for c in configured for v in c.vertices}),
    )
    return EXIT_PRECONDITION if result.status is Status.PRECONDITION_FAILED else EXIT_OK


def cmd_verify(args: argparse.Namespace, rep: Reporter) -> int:
    g = _load_graph(args.graph)
    f = _load_config(args.config)
    missing = [v for v in range(g.n) if v not in f]
    bad = [v for v in f if not 0 <= v < g.n]
    if bad:
        raise InputError(f"{args.config}: vertex ids {bad} not in the graph")
    unsatisfied = [] if missing else verify(g, f)
    ok = not missing and not unsatisfied
    status = "ok" if ok else "invalid"
    lines = [f"status: {status}"]
    if missing:
        lines.append(f"unlabeled vertices: {' '.join(map(str, missing))}")
    if unsatisfied:
        lines.append(f"unsatisfied vertices: {' '.join(map(str, unsatisfied))}")
    rep.emit({"status": status, "unlabeled": missing, "unsatisfied": unsatisfied, "components": []}, lines)
    return EXIT_OK if ok else EXIT_PRECONDITION


def cmd_oracle(args: argparse.Namespace, rep: Reporter) -> int:
    g = _load_graph(args.graph)
    res = exact_solve(g, OracleBudget(node_limit=args.node_limit, time_limit=args.time_limit))
    status = {
        Outcome.CONFIGURABLE: "ok",
        Outcome.NOT_CONFIGURABLE: "not-configurable",
        Outcome.BUDGET_EXCEEDED: "budget-exceeded",
    }[res.outcome]
    comp: dict = {"vertices": list(range(g.n))}
    if res.configuration is not None:
        comp["labels"] = config_to_json(res.configuration)
    rep.emit(
        {"status": status, "nodes": res.nodes, "components": [comp]},
        [f"status: {status}", f"nodes: {res.nodes}"],
        format_config(res.configuration) if res.configuration else "",
    )
    return EXIT_PRECONDITION if res.outcome is Outcome.BUDGET_EXCEEDED else EXIT_OK


def cmd_check(args: argparse.Namespace, rep: Reporter) -> int:
    g = _load_graph(args.graph)
    claw = induced_star(g, 6)
    comps = []
    ok = True
    for comp in components(g):
        sub, old = induced(g, comp)
        bad = check_hypotheses(sub)
        entry: dict = {"vertices": old}
        if bad is not None:
            ok = False
            entry["reason"] = bad[0]
            entry["witness"] = [old[v] for v in bad[1]]
        else:
            kind = detect_exceptional(sub)
            if kind is not None:
                entry["kind"] = kind.value
        comps.append(entry)
    status = "ok" if ok else "precondition-failed"
    facts = {
        "n": g.n,
        "m": g.m,
        "min_degree": min_degree(g) if g.n else 0,
        "max_degree": max_degree(g) if g.n else 0,
        "connected": is_connected(g) if g.n else True,
        "k16_free": claw is None,
    }
    lines = [f"status: {status}", *(f"{k}: {v}" for k, v in facts.items())]
    for i, c in enumerate(comps):
        extra = c.get("kind") or c.get("reason") or "fine"
        lines.append(f"component {i} [{len(c['vertices'])} vertices]: {extra}")
    rep.emit({"status": status, **facts, "components": comps}, lines)
    return EXIT_OK if ok else EXIT_PRECONDITION


def rdisk_points(count: int, box: float, radius: float, seed: int) -> PointSet:
    rng = random.Random(seed)
    pts = tuple((rng.uniform(0.0, box), rng.uniform(0.0, box)) for _ in range(count))
    return PointSet(pts, radius)


def cmd_gen_rdisk(args: argparse.Namespace, rep: Reporter) -> int:
    if args.points_file:
        try:
            ps = parse_point_set(_read(args.points_file))
        except GraphError as exc:
            raise InputError(f"{args.points_file}: {exc}") from None
        if args.radius is not None:
            ps = PointSet(ps.points, args.radius)
    else:
        if args.count < 1 or args.radius is None or args.radius <= 0 or args.box <= 0:
            raise InputError("gen-rdisk needs --count >= 1, --radius > 0 and --box > 0")
        ps = rdisk_points(args.count, args.box, args.radius, args.seed)
    g = generate_rdisk(ps)
    pts_text, edge_text = format_point_set(ps), format_edge_list(g)
    if args.output:
        _write(args.output + ".pts", pts_text)
        _write(args.output + ".edges", edge_text)
    if rep.as_json:
        rep.emit({"status": "ok", "points": [list(p) for p in ps.points], "radius": ps.radius,
                  "edges": [list(e) for e in g.edges()], "components": []}, [])
    elif not args.output:
        sys.stdout.write(pts_text + "\n" + edge_text)
    return EXIT_OK


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def cmd_gen_counterexample(args: argparse.Namespace, rep: Reporter) -> int:
    try:
        if args.family == "k19":
            fg = cx.build_k19_family(args.k)
            verified = cx.check_k19_nonconfigurable(fg)
        else:
            fg = cx.build_pigeonhole_family(cx.PigeonholeParams(args.k))
            verified = cx.check_pigeonhole(fg)
    except cx.FamilyError as exc:
        raise InputError(str(exc)) from None
    edge_text = format_edge_list(fg.graph)
    if args.output:
        _write(args.output + ".edges", edge_text)
        _write(args.output + ".roles", fg.annotation())
    print(f"# {args.family} k={args.k} n={fg.graph.n} non-configurable: {verified}", file=sys.stderr)
    if rep.as_json:
        rep.emit({"status": "ok" if verified else "check-failed", "family": args.family, "k": args.k,
                  "n": fg.graph.n, "edges": [list(e) for e in fg.graph.edges()],
                  "roles": {str(v): r for v, r in sorted(fg.roles.items())}, "components": []}, [])
    elif not args.output:
        sys.stdout.write(edge_text)
    return EXIT_OK if verified else EXIT_PRECONDITION


def cmd_dr(args: argparse.Namespace, rep: Reporter) -> int:
    if args.r < 1:
        raise InputError("--r must be positive")
    g = _load_graph(args.graph)
    result = solve(g)
    status = _STATUS_WORD[result.status]
    if not result.configured:
        lines = [f"status: {status}", *result.reasons()]
        rep.emit({"status": status, "components": [c.to_json() for c in result.components]}, lines)
        return EXIT_PRECONDITION if result.status is Status.PRECONDITION_FAILED else EXIT_OK
    rc = make_r_configuration(g, result.configuration, args.r)
    if not verify_r_configuration(g, rc):
        raise SolverError("r-configuration failed verification")
    size = r_size(rc)

    def fmt(x: object) -> str:
        return x if isinstance(x, str) else f"{x[0]}.{x[1]}"

    labels = {v: sorted(fmt(x) for x in rc.assignment[v]) for v in sorted(rc.assignment)}
    body = "".join(f"{v}: {' '.join(ls)}\n" for v, ls in labels.items())
    rep.emit(
        {"status": status, "r": args.r, "size": size,
         "components": [{"vertices": list(range(g.n)), "labels": {str(v): ls for v, ls in labels.items()}}]},
        [f"status: {status}", f"r: {args.r}", f"|R|: {size}"],
        body,
    )
    return EXIT_OK


def _qualifies(g: Graph) -> bool:
    return min_degree(g) >= 2 and induced_star(g, 6) is None


def enumerate_test(nmax: int) -> dict:
    """Run ``solve`` and the oracle on every qualifying connected graph up to ``nmax``."""
    rows = []
    exceptional: Counter[str] = Counter()
    discrepancies = []
    for n in range(3, nmax + 1):
        tested = agree = exc = 0
        for g in enumerate_small_graphs(n, _qualifies):
            tested += 1
            res = solve(g)
            exact = exact_solve(g).configurable
            mine = res.configured and not verify(g, res.configuration)
            if mine == exact:
                agree += 1
            else:
                discrepancies.append(format_edge_list(g))
            if res.status is Status.EXCEPTIONAL:
                exc += 1
                exceptional[res.components[0].kind.value] += 1
        rows.append({"n": n, "tested": tested, "agree": agree, "exceptional": exc})
    return {"rows": rows, "exceptional": dict(exceptional), "discrepancies": discrepancies}


def cmd_enumerate_test(args: argparse.Namespace, rep: Reporter) -> int:
    limit = MAX_ENUMERATION_ORDER if args.allow_slow else 7
    if not 3 <= args.nmax <= limit:
        raise InputError(f"--nmax must be in 3..{limit}" + ("" if args.allow_slow else " (8 needs --allow-slow)"))
    summary = enumerate_test(args.nmax)
    ok = not summary["discrepancies"]
    status = "ok" if ok else "discrepancy"
    lines = [f"status: {status}", "n  tested  agree  exceptional"]
    lines += [f"{r['n']}  {r['tested']}  {r['agree']}  {r['exceptional']}" for r in summary["rows"]]
    lines.append("exceptional kinds: " + " ".join(sorted(summary["exceptional"])))
    lines.append(f"discrepancies: {len(summary['discrepancies'])}")
    rep.emit({"status": status, **summary, "components": []}, lines)
    return EXIT_OK if ok else EXIT_PRECONDITION


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pairconfig", description="Label pairs that cover every closed neighborhood.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verbose", action="store_true", help="stream reduction steps to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="construct a configuration")
    p.add_argument("graph", help="edge-list file, or - for stdin")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check a configuration against a graph")
    p.add_argument("graph")
    p.add_argument("config", help="'v: a b' lines or JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="exact backtracking search")
    p.add_argument("graph")
    p.add_argument("--node-limit", type=int, default=10**8)
    p.add_argument("--time-limit", type=float, default=60.0)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", parents=[common], help="report degrees, K_{1,6} and exceptional components")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen-rdisk", parents=[common], help="random R-disk graph")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--box", type=float, default=10.0)
    p.add_argument("--radius", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points-file", help="use these points instead of sampling")
    p.add_argument("--output", "-o", help="write PREFIX.pts and PREFIX.edges")
    p.set_defaults(func=cmd_gen_rdisk)

    p = sub.add_parser("gen-counterexample", parents=[common], help="non-configurable family member")
    p.add_argument("--family", choices=("k19", "pigeonhole"), required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--output", "-o", help="write PREFIX.edges and PREFIX.roles")
    p.set_defaults(func=cmd_gen_counterexample)

    p = sub.add_parser("dr", parents=[common], help="r-configuration with floor(5r/2) labels")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_dr)

    p = sub.add_parser("enumerate-test", parents=[common], help="solver against oracle on all small graphs")
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--allow-slow", action="store_true", help="permit nmax = 8")
    p.set_defaults(func=cmd_enumerate_test)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Reporter(args.json, sys.stdout)
    try:
        return args.func(args, rep)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
