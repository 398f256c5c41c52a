"""``conegraph`` command line: generate point sets, build graphs, measure stretch, check certificates.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or I/O errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path as FsPath
from typing import Optional, Sequence

from . import __version__
from ._backend import BACKEND
from .checks import structure_report
from .formats import (EXPORT_FORMATS, PointsFormatError, export_graph, format_points,
                      import_graph, parse_points)
from .gen import GenKind, GenSpec, generate, uniform
from .geometry import PointSet
from .graphs import GraphKind, build_graph
from .lemmas import LEMMA_IDS, validate_lemma_bounds
from .metrics import stretch_report, theoretical_bound
from .paths import REL_TOL, PreconditionError, SpannerContext
from .witness import WitnessError, WitnessExtractor

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class RunReport:
    """JSON report: one entry per check, plus tool version, input digest and timing."""

    def __init__(self, command: str, digest: str):
        self.command = command
        self.digest = digest
        self.checks: list[dict] = []
        self._t0 = time.perf_counter()

    def check(self, name: str, passed: bool, **measured) -> bool:
        if any(c["name"] == name for c in self.checks):
            raise ValueError(f"duplicate check {name!r}")
        self.checks.append({"name": name, "passed": bool(passed), **measured})
        return passed

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "tool": "conegraph",
            "version": __version__,
            "backend": BACKEND,
            "command": self.command,
            "input_digest": self.digest,
            "passed": self.passed,
            "checks": self.checks,
            "timing_s": round(time.perf_counter() - self._t0, 6),
        }


def _digest(*parts: bytes) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p)
        h.update(b"\0")
    return "sha256:" + h.hexdigest()


def _read(path: str) -> bytes:
    try:
        return sys.stdin.buffer.read() if path == "-" else FsPath(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: Optional[str], data: bytes) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        FsPath(path).write_bytes(data)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _load_points(path: str) -> tuple[PointSet, bytes]:
    raw = _read(path)
    try:
        return parse_points(raw), raw
    except PointsFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit_report(report: RunReport, path: Optional[str]) -> int:
    _write(path, (json.dumps(report.to_dict(), indent=2) + "\n").encode())
    return EXIT_OK if report.passed else EXIT_FAIL


def _params(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        out[key] = float(value) if any(ch in value for ch in ".eE") else int(value)
    return out


def cmd_gen(args) -> int:
    spec = GenSpec(GenKind(args.kind), args.n, args.seed, _params(args.param))
    _write(args.out, format_points(generate(spec)).encode())
    return EXIT_OK


def cmd_build(args) -> int:
    ps, _ = _load_points(args.points)
    g = build_graph(args.graph, ps, args.cones)
    fmt = args.format or _format_from_suffix(args.out)
    _write(args.out, export_graph(g, fmt, cones=args.show_cones))
    return EXIT_OK


def _format_from_suffix(path: Optional[str]) -> str:
    suffix = FsPath(path).suffix.lower() if path and path != "-" else ""
    return {".csv": "edge-csv", ".dot": "dot", ".gv": "dot", ".svg": "svg"}.get(suffix, "json")


def _stretch_check(report: RunReport, name: str, g) -> None:
    sr = stretch_report(g)
    bound = theoretical_bound(g.kind, g.cone_count)
    if bound.is_numeric:
        ok = sr.connected and sr.max_stretch <= bound.value + REL_TOL
    else:
        ok = True  # nothing to compare against
    report.check(name, ok, graph=g.kind.value, cones=g.cone_count,
                 measured=sr.max_stretch if sr.connected else None,
                 connected=sr.connected, argmax_pair=list(sr.argmax_pair),
                 theoretical_bound=bound.value, bound_status=bound.status.value)


def cmd_stretch(args) -> int:
    ps, raw = _load_points(args.points)
    report = RunReport("stretch", _digest(raw, f"{args.graph}:{args.cones}".encode()))
    _stretch_check(report, "stretch", build_graph(args.graph, ps, args.cones))
    return _emit_report(report, args.report)


def _parse_edge(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--edge expects A,B, got {text!r}") from None
    return a, b


def cmd_witness(args) -> int:
    if args.k < 6:
        raise UsageError("--k must be at least 6")
    ps, raw = _load_points(args.points)
    report = RunReport("witness", _digest(raw, f"k={args.k}".encode()))
    ext = WitnessExtractor(ps, args.k)
    if args.edge:
        a, b = _parse_edge(args.edge)
        if not (0 <= a < len(ps) and 0 <= b < len(ps)):
            raise UsageError(f"edge ({a}, {b}) names a point outside 0..{len(ps) - 1}")
        edges = [(a, b)]
    else:
        edges = ext.ctx.theta_edges()
    certs, failures = [], []
    for a, b in edges:
        try:
            certs.append(ext.extract(a, b))
        except PreconditionError as exc:
            raise UsageError(str(exc)) from None
        except WitnessError as exc:
            failures.append({"edge": [a, b], "error": str(exc)})
    worst = max((c.ratio for c in certs), default=0.0)
    report.check("certificates", not failures and all(c.satisfied for c in certs),
                 k=args.k, edges=len(edges), satisfied=sum(c.satisfied for c in certs),
                 errors=failures, max_ratio=worst, factor=certs[0].factor if certs else None)
    if args.edge or args.details:
        report.checks[-1]["certificates"] = [c.to_dict() for c in certs]
    return _emit_report(report, args.report)


def _verify_lemmas(report: RunReport, ps_list, k: int) -> None:
    totals = {lid: {"matches": 0, "violations": 0, "edge_violations": 0,
                    "degenerate": 0, "max_ratio": 0.0} for lid in LEMMA_IDS}
    for ps in ps_list:
        ctx = SpannerContext(ps, k)
        for lid in LEMMA_IDS:
            if lid == "L-aa3" and k < 3:
                continue
            r = validate_lemma_bounds(ctx, k, lid)
            t = totals[lid]
            t["matches"] += len(r.matches)
            t["violations"] += len(r.violations)
            t["edge_violations"] += len(r.edge_violations)
            t["degenerate"] += r.degenerate
            t["max_ratio"] = max(t["max_ratio"], r.max_ratio)
    for lid, t in totals.items():
        report.check(lid, t["violations"] == 0 and t["edge_violations"] == 0, **t)


def _verify_bounds(report: RunReport, ps_list, k: int) -> None:
    for kind, c in ((GraphKind.THETA, 6), (GraphKind.YAO, 6 * k), (GraphKind.YAOYAO, 6 * k)):
        worst, ok, connected = 0.0, True, True
        bound = theoretical_bound(kind, c)
        for ps in ps_list:
            sr = stretch_report(build_graph(kind, ps, c))
            connected &= sr.connected
            worst = max(worst, sr.max_stretch)
            if bound.is_numeric:
                ok &= sr.connected and sr.max_stretch <= bound.value + REL_TOL
        report.check(f"stretch-{kind.value}-{c}", ok, measured=worst if connected else None,
                     connected=connected, theoretical_bound=bound.value,
                     bound_status=bound.status.value)


def _verify_invariants(report: RunReport, ps_list, k: int) -> None:
    totals = {"yy_not_in_yao": 0, "degree_excess": 0, "cone_collisions": 0,
              "occupied_triangles": 0, "incoming_collisions": 0}
    edges = unsatisfied = errors = 0
    worst = 0.0
    for ps in ps_list:
        ctx = SpannerContext(ps, k)
        for key, v in structure_report(ctx).to_dict().items():
            if key in totals:
                totals[key] += v
        if k >= 6:
            ext = WitnessExtractor(ps, k, ctx)
            for a, b in ctx.theta_edges():
                edges += 1
                try:
                    cert = ext.extract(a, b)
                except WitnessError:
                    errors += 1
                    continue
                unsatisfied += not cert.satisfied
                worst = max(worst, cert.ratio)
    report.check("structure", not any(totals.values()), **totals)
    if k >= 6:
        report.check("certificates", unsatisfied == 0 and errors == 0, edges=edges,
                     unsatisfied=unsatisfied, errors=errors, max_ratio=worst)


_SUITES = {"lemmas": _verify_lemmas, "bounds": _verify_bounds, "invariants": _verify_invariants}


def cmd_verify(args) -> int:
    if args.k < 1 or args.seeds < 1 or args.n < 2:
        raise UsageError("--k and --seeds must be >= 1 and --n >= 2")
    if args.suite == "lemmas" and args.k < 2:
        raise UsageError("the lemma suite needs --k >= 2")
    seeds = range(args.seed0, args.seed0 + args.seeds)
    report = RunReport(f"verify-{args.suite}",
                       _digest(f"{args.suite}:k={args.k}:n={args.n}:seeds={seeds.start}..{seeds.stop}".encode()))
    _SUITES[args.suite](report, [uniform(args.n, s) for s in seeds], args.k)
    return _emit_report(report, args.report)


def cmd_bounds(args) -> int:
    print(theoretical_bound(args.graph, args.cones))
    return EXIT_OK


def cmd_render(args) -> int:
    raw = _read(args.graph)
    try:
        g = import_graph(raw)
    except ValueError as exc:
        raise UsageError(f"{args.graph}: {exc}") from None
    _write(args.out, export_graph(g, "svg", cones=args.show_cones))
    return EXIT_OK


def _graph_kind(text: str) -> GraphKind:
    try:
        return GraphKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conegraph", description="Theta, Yao and Yao-Yao cone graphs.")
    p.add_argument("--version", action="version", version=f"conegraph {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="generate a seeded point set")
    s.add_argument("--kind", choices=[k.value for k in GenKind], default="uniform")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_gen)

    def graph_args(s, cones_required=True):
        s.add_argument("--graph", type=_graph_kind, required=True)
        s.add_argument("--cones", type=int, required=cones_required, default=6)

    s = sub.add_parser("build", help="build a graph and export it")
    graph_args(s)
    s.add_argument("--points", required=True)
    s.add_argument("--out", default="-")
    s.add_argument("--format", choices=EXPORT_FORMATS)
    s.add_argument("--show-cones", action="store_true")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("stretch", help="measured vs. known stretch bound")
    graph_args(s)
    s.add_argument("--points", required=True)
    s.add_argument("--report", default="-")
    s.set_defaults(func=cmd_stretch)

    s = sub.add_parser("witness", help="Yao-Yao paths replacing Theta_6 edges")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--points", required=True)
    which = s.add_mutually_exclusive_group(required=True)
    which.add_argument("--edge", metavar="A,B")
    which.add_argument("--all", action="store_true")
    s.add_argument("--details", action="store_true", help="include every certificate")
    s.add_argument("--report", default="-")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("verify", help="run a check suite over seeded uniform sets")
    s.add_argument("--suite", choices=sorted(_SUITES), required=True)
    s.add_argument("--k", type=int, default=6)
    s.add_argument("--seeds", type=int, default=10)
    s.add_argument("--seed0", type=int, default=0)
    s.add_argument("--n", type=int, default=100)
    s.add_argument("--report", default="-")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bounds", help="print the known stretch bound")
    graph_args(s)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("render", help="render a JSON graph to SVG")
    s.add_argument("--graph", required=True, help="graph JSON produced by build")
    s.add_argument("--out", default="-")
    s.add_argument("--show-cones", action="store_true")
    s.set_defaults(func=cmd_render)
    return p


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"conegraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad parameter values (cone counts, kinds, generator params)
        print(f"conegraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
