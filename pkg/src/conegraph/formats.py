"""Point files and graph export (edge CSV, DOT, SVG, JSON)."""
from __future__ import annotations

import json
import math
from typing import Union

import numpy as np

from .geometry import ConeSystem, PointSet
from .graphs import GeometricDigraph, GraphKind

EXPORT_FORMATS = ("edge-csv", "dot", "svg", "json")


class PointsFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _fields(line: str) -> list[str]:
    return [f.strip() for f in line.split(",")] if "," in line else line.split()


def _is_header(fields: list[str]) -> bool:
    return [f.lower() for f in fields] in (["x", "y"], ["id", "x", "y"])


def parse_points(data: Union[bytes, str]) -> PointSet:
    """Parse ``x y`` or ``id,x,y`` lines (optional header; ``#`` comments and blank lines skipped).

    Explicit ids must be a permutation of ``0..n-1``; points are ordered by id.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    rows: list[tuple[int, int | None, float, float]] = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = _fields(line)
        if not rows and not seen_header and _is_header(fields):
            seen_header = True
            continue
        if len(fields) not in (2, 3):
            raise PointsFormatError(f"expected 2 or 3 fields, got {len(fields)}", lineno)
        try:
            pid = int(fields[0]) if len(fields) == 3 else None
            x, y = float(fields[-2]), float(fields[-1])
        except ValueError:
            raise PointsFormatError(f"non-numeric token in {raw.strip()!r}", lineno) from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise PointsFormatError("coordinates must be finite", lineno)
        rows.append((lineno, pid, x, y))
    if not rows:
        raise PointsFormatError("no points")
    if len({r[1] is None for r in rows}) > 1:
        raise PointsFormatError("mix of lines with and without ids")
    if rows[0][1] is not None:
        ids = sorted(r[1] for r in rows)
        if ids != list(range(len(rows))):
            raise PointsFormatError("ids must be 0..n-1, each exactly once")
        rows.sort(key=lambda r: r[1])
    first_line: dict[tuple[float, float], int] = {}
    for lineno, _, x, y in rows:
        key = (x, y)
        if key in first_line:
            raise PointsFormatError(
                f"duplicate point ({x!r}, {y!r}) also on line {first_line[key]}", lineno)
        first_line[key] = lineno
    return PointSet(np.array([[r[2], r[3]] for r in rows], dtype=np.float64))


def format_points(ps: PointSet) -> str:
    lines = ["id,x,y"]
    lines += [f"{i},{x!r},{y!r}" for i, (x, y) in enumerate(ps.xy.tolist())]
    return "\n".join(lines) + "\n"


def graph_to_dict(g: GeometricDigraph) -> dict:
    return {
        "kind": g.kind.value,
        "cone_count": g.cone_count,
        "points": g.points.xy.tolist(),
        "edges": g.edges.tolist(),
    }


def graph_from_dict(d: dict) -> GeometricDigraph:
    try:
        ps = PointSet(np.array(d["points"], dtype=np.float64).reshape(-1, 2))
        return GeometricDigraph(GraphKind.parse(d["kind"]), int(d["cone_count"]), ps,
                                np.array(d["edges"], dtype=np.int64).reshape(-1, 2))
    except KeyError as exc:
        raise ValueError(f"graph document is missing {exc.args[0]!r}") from None


def import_graph(data: Union[bytes, str]) -> GeometricDigraph:
    """Inverse of ``export_graph(g, "json")``."""
    return graph_from_dict(json.loads(data))


def _edge_csv(g: GeometricDigraph) -> str:
    # one "src,dst,length" row per edge, no header; edges are already sorted
    return "".join(f"{u},{v},{w!r}\n" for (u, v), w in zip(g.edges.tolist(), g.lengths.tolist()))


def _dot(g: GeometricDigraph) -> str:
    out = [f'digraph "{g.kind.value}_{g.cone_count}" {{']
    for i, (x, y) in enumerate(g.points.xy.tolist()):
        out.append(f'  {i} [pos="{x!r},{y!r}!"];')
    for u, v in g.edges.tolist():
        out.append(f"  {u} -> {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def _svg(g: GeometricDigraph, size: float = 600.0, cones: bool = False) -> str:
    xy = g.points.xy
    lo, hi = xy.min(axis=0), xy.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1])) or 1.0
    pad = 0.08 * span
    scale = size / (span + 2 * pad)

    def px(p) -> tuple[float, float]:
        # y axis flipped so the picture has the usual orientation
        return (float(p[0] - lo[0] + pad) * scale, float(hi[1] - p[1] + pad) * scale)

    w = (float(hi[0] - lo[0]) + 2 * pad) * scale
    h = (float(hi[1] - lo[1]) + 2 * pad) * scale
    r = max(2.0, size / 150.0)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.2f}" height="{h:.2f}" '
        f'viewBox="0 0 {w:.2f} {h:.2f}">',
        f"<title>{g.kind.value} graph, {g.cone_count} cones, {g.n} points</title>",
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
        "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
        "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>",
        f'<rect width="{w:.2f}" height="{h:.2f}" fill="white"/>',
    ]
    if cones:
        csys = ConeSystem(g.cone_count)
        reach = 0.25 * span
        for p in xy:
            x0, y0 = px(p)
            for j in range(g.cone_count):
                dx, dy = csys.ray(j)
                x1, y1 = px((p[0] + reach * dx, p[1] + reach * dy))
                parts.append(f'<line class="cone" x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" '
                             f'y2="{y1:.2f}" stroke="#bbb" stroke-width="0.6" stroke-dasharray="3,3"/>')
    for u, v in g.edges.tolist():
        (x0, y0), (x1, y1) = px(xy[u]), px(xy[v])
        length = math.hypot(x1 - x0, y1 - y0) or 1.0
        # stop short of the target disc so the arrowhead stays visible
        x1 -= (x1 - x0) * r / length
        y1 -= (y1 - y0) * r / length
        parts.append(f'<line class="edge" data-src="{u}" data-dst="{v}" x1="{x0:.2f}" '
                     f'y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}" stroke="#333" '
                     f'stroke-width="1.2" marker-end="url(#arrow)"/>')
    for i, p in enumerate(xy):
        x0, y0 = px(p)
        parts.append(f'<circle class="point" data-id="{i}" cx="{x0:.2f}" cy="{y0:.2f}" '
                     f'r="{r:.2f}" fill="#c0392b"/>')
        if g.n <= 50:
            parts.append(f'<text x="{x0 + 1.5 * r:.2f}" y="{y0 - 1.5 * r:.2f}" '
                         f'font-size="{3 * r:.1f}" font-family="sans-serif">{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def export_graph(g: GeometricDigraph, fmt: str, cones: bool = False) -> bytes:
    if fmt == "edge-csv":
        text = _edge_csv(g)
    elif fmt == "dot":
        text = _dot(g)
    elif fmt == "svg":
        text = _svg(g, cones=cones)
    elif fmt == "json":
        text = json.dumps(graph_to_dict(g)) + "\n"
    else:
        raise ValueError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")
    return text.encode("utf-8")
