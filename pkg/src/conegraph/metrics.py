"""Stretch factors, degrees and the closed-form stretch bounds known for cone graphs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import kernels
from .graphs import GeometricDigraph, GraphKind


@dataclass(frozen=True)
class ShortestPaths:
    """All-pairs shortest paths over the undirected, Euclidean-weighted view of a graph."""

    dist: np.ndarray
    pred: np.ndarray

    def path(self, s: int, t: int) -> list[int] | None:
        if s == t:
            return [s]
        if not np.isfinite(self.dist[s, t]):
            return None
        out = [t]
        while out[-1] != s:
            out.append(int(self.pred[s, out[-1]]))
            if len(out) > len(self.dist):
                raise RuntimeError("predecessor table contains a cycle")
        return out[::-1]


def shortest_paths(g: GeometricDigraph) -> ShortestPaths:
    indptr, indices, weights = g.undirected_csr()
    dist, pred = kernels.all_pairs(g.n, indptr, indices, weights)
    return ShortestPaths(dist, pred)


def euclidean_matrix(xy: np.ndarray) -> np.ndarray:
    dx = xy[None, :, 0] - xy[:, None, 0]
    dy = xy[None, :, 1] - xy[:, None, 1]
    return np.sqrt(dx * dx + dy * dy)


@dataclass(frozen=True)
class StretchReport:
    max_stretch: float
    argmax_pair: tuple[int, int]
    connected: bool
    per_pair_stretch: Optional[np.ndarray] = None

    def to_dict(self) -> dict:
        return {
            "max_stretch": self.max_stretch if self.connected else None,
            "argmax_pair": list(self.argmax_pair),
            "connected": self.connected,
        }


def stretch_report(g: GeometricDigraph, mode: str = "max_only") -> StretchReport:
    """Worst ratio of graph distance to Euclidean distance over all point pairs.

    Unreachable pairs make the report disconnected with ``max_stretch = inf``;
    ``argmax_pair`` then names the first such pair.
    """
    if mode not in ("max_only", "full_table"):
        raise ValueError(f"unknown mode {mode!r}")
    n = g.n
    if n < 2:
        raise ValueError("stretch needs at least two points")
    sp = shortest_paths(g)
    eu = euclidean_matrix(g.points.xy)
    iu, ju = np.triu_indices(n, 1)
    ratio = sp.dist[iu, ju] / eu[iu, ju]
    unreachable = ~np.isfinite(ratio)
    if unreachable.any():
        k = int(np.argmax(unreachable))
        best, connected = math.inf, False
    else:
        k = int(np.argmax(ratio))
        best, connected = float(ratio[k]), True
    table = None
    if mode == "full_table":
        with np.errstate(invalid="ignore", divide="ignore"):
            table = sp.dist / eu
        np.fill_diagonal(table, 1.0)
    return StretchReport(best, (int(iu[k]), int(ju[k])), connected, table)


@dataclass(frozen=True)
class DegreeStats:
    in_degree: np.ndarray
    out_degree: np.ndarray

    @property
    def total_degree(self) -> np.ndarray:
        return self.in_degree + self.out_degree

    @property
    def max_in(self) -> int:
        return int(self.in_degree.max(initial=0))

    @property
    def max_out(self) -> int:
        return int(self.out_degree.max(initial=0))

    @property
    def max_total(self) -> int:
        return int(self.total_degree.max(initial=0))


def degree_stats(g: GeometricDigraph) -> DegreeStats:
    e = g.edges
    return DegreeStats(np.bincount(e[:, 1], minlength=g.n), np.bincount(e[:, 0], minlength=g.n))


class BoundStatus(str, Enum):
    NUMERIC = "numeric"
    NOT_SPANNER = "not_spanner"
    OPEN = "open"


@dataclass(frozen=True)
class TheoreticalBound:
    kind: GraphKind
    cone_count: int
    status: BoundStatus
    value: Optional[float] = None

    @property
    def is_numeric(self) -> bool:
        return self.status is BoundStatus.NUMERIC

    def __str__(self) -> str:
        if self.is_numeric:
            return f"{self.value:.10g}"
        return "NotSpanner" if self.status is BoundStatus.NOT_SPANNER else "Open"

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "cone_count": self.cone_count,
                "status": self.status.value, "value": self.value}


# Yao-Yao with 6k cones: stretch 11.67 for k >= 6, 4.75 for k >= 8.
YAOYAO_STRETCH = 11.67
YAOYAO_STRETCH_K8 = 4.75
# per Theta_6 edge, length of the Yao-Yao replacement path
THETA6_EDGE_WITNESS_FACTOR = 5.832


def theta_stretch(c: int) -> float:
    return 1.0 / (1.0 - 2.0 * math.sin(math.pi / c))


def yao_stretch(c: int) -> float:
    t = 2.0 * math.pi / c
    return (1.0 + math.sqrt(2.0 - 2.0 * math.cos(t))) / (2.0 * math.cos(t) - 1.0)


def yao_stretch_large(c: int) -> float:
    t = 2.0 * math.pi / c
    return 1.0 / (math.cos(t) - math.sin(t))


def theoretical_bound(kind, c: int) -> TheoreticalBound:
    """Best published stretch bound for a cone graph with ``c`` cones."""
    kind = GraphKind.parse(kind)
    if c < 2:
        raise ValueError("cone count must be >= 2")

    def num(v: float) -> TheoreticalBound:
        return TheoreticalBound(kind, c, BoundStatus.NUMERIC, v)

    no = TheoreticalBound(kind, c, BoundStatus.NOT_SPANNER)
    unknown = TheoreticalBound(kind, c, BoundStatus.OPEN)

    if kind is GraphKind.HALF_THETA6:
        if c != 6:
            raise ValueError("half-Theta_6 uses exactly 6 cones")
        return num(2.0)
    if kind is GraphKind.THETA:
        if c <= 3:
            return no
        if c in (4, 5):
            return unknown
        return num(2.0) if c == 6 else num(theta_stretch(c))
    if kind is GraphKind.YAO:
        if c <= 3:
            return no
        if c == 4:
            return num(8.0 * math.sqrt(2.0) * (26.0 + 23.0 * math.sqrt(2.0)))
        if c == 5:
            return unknown
        if c == 6:
            return num(17.64)
        if c <= 8:
            return num(yao_stretch(c))
        return num(min(yao_stretch(c), yao_stretch_large(c)))
    # Yao-Yao
    if c in (2, 3, 4, 6):
        return no
    if c % 6 == 0 and c // 6 >= 8:
        return num(YAOYAO_STRETCH_K8)
    if c % 6 == 0 and c // 6 >= 6:
        return num(YAOYAO_STRETCH)
    return unknown
