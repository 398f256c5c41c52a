"""Paths, the shared Theta_6 / Yao / Yao-Yao context, and the constructive Theta_6 path.

``SpannerContext`` bundles everything the witness extraction and the lemma
validators look up repeatedly for one point set: the three cone graphs for
``6k`` Yao cones, their per-cone tables, cone matrices, and all-pairs shortest
paths in the undirected Theta_6 graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .geometry import (
    THETA6,
    ConeSystem,
    PointSet,
    canonical_triangle,
    cone_index,
    cross,
    inside_open_triangle,
)
from .graphs import (
    GeometricDigraph,
    GraphKind,
    cone_matrix,
    theta_table,
    yao_table,
    yaoyao_tables,
)
from .metrics import ShortestPaths, shortest_paths

REL_TOL = 1e-9


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    ids: tuple[int, ...]
    total_length: float
    max_edge_length: float

    @classmethod
    def from_ids(cls, ps: PointSet, ids: Sequence[int]) -> "Path":
        ids = tuple(int(i) for i in ids)
        if not ids:
            raise ValueError("empty path")
        lengths = [ps.dist(u, v) for u, v in zip(ids, ids[1:])]
        if any(u == v for u, v in zip(ids, ids[1:])):
            raise ValueError("consecutive ids must differ")
        return cls(ids, math.fsum(lengths), max(lengths, default=0.0))

    @property
    def start(self) -> int:
        return self.ids[0]

    @property
    def end(self) -> int:
        return self.ids[-1]

    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.ids, self.ids[1:]))

    def reversed(self) -> "Path":
        return Path(self.ids[::-1], self.total_length, self.max_edge_length)

    def __add__(self, other: "Path") -> "Path":
        """Concatenation; the end of ``self`` must be the start of ``other``."""
        if self.end != other.start:
            raise ValueError(f"cannot join path ending at {self.end} to one starting at {other.start}")
        return Path(self.ids + other.ids[1:], self.total_length + other.total_length,
                    max(self.max_edge_length, other.max_edge_length))

    def __len__(self) -> int:
        return len(self.ids)


def concat(*paths: Path) -> Path:
    out = paths[0]
    for p in paths[1:]:
        out = out + p
    return out


@dataclass(frozen=True)
class Frame:
    """Logical frame in which edge ``apex -> ref`` sits in Theta cone 0, on or below its bisector.

    Coordinates are never transformed; only cone labels and orientations are
    remapped (rotation by ``rotation`` sixths, then an optional mirror across
    the cone-0 bisector).
    """

    apex: int
    rotation: int
    reflected: bool

    def theta_cone(self, absolute: int) -> int:
        j = (absolute - self.rotation) % 6
        return (-j) % 6 if self.reflected else j

    def orientation(self, value: float) -> float:
        """Map a signed area measured in the real frame into the logical frame."""
        return -value if self.reflected else value


class SpannerContext:
    """Theta_6, Y_6k and YY_6k over one point set, with lookup helpers."""

    def __init__(self, ps: PointSet, k: int):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.ps = ps
        self.k = int(k)
        self.c = 6 * self.k
        self.yao_cones = ConeSystem(self.c)
        self.alpha = self.yao_cones.alpha
        self.theta = theta_table(ps, 6)
        self.yao = yao_table(ps, self.c)
        self.yy, self.incoming = yaoyao_tables(ps, self.c, self.yao)
        self.cone6 = cone_matrix(ps, 6)
        self.coneY = cone_matrix(ps, self.c)

    @property
    def n(self) -> int:
        return len(self.ps)

    def _graph(self, kind, c, table) -> GeometricDigraph:
        src, slot = np.nonzero(table >= 0)
        return GeometricDigraph(kind, c, self.ps, np.column_stack((src, table[src, slot])))

    @cached_property
    def theta_graph(self) -> GeometricDigraph:
        return self._graph(GraphKind.THETA, 6, self.theta)

    @cached_property
    def yao_graph(self) -> GeometricDigraph:
        return self._graph(GraphKind.YAO, self.c, self.yao)

    @cached_property
    def yy_graph(self) -> GeometricDigraph:
        return self._graph(GraphKind.YAOYAO, self.c, self.yy)

    @cached_property
    def theta_paths(self) -> ShortestPaths:
        return shortest_paths(self.theta_graph)

    def in_theta(self, a: int, b: int) -> bool:
        return a != b and self.theta[a, self.cone6[a, b]] == b

    def in_yao(self, a: int, b: int) -> bool:
        return a != b and self.yao[a, self.coneY[a, b]] == b

    def in_yy(self, a: int, b: int) -> bool:
        return a != b and self.yy[a, self.coneY[a, b]] == b

    def yao_target(self, a: int, toward: int) -> int:
        """Yao neighbour of ``a`` in the Yao cone of ``a`` that contains ``toward``."""
        return int(self.yao[a, self.coneY[a, toward]])

    def yy_source(self, b: int, toward: int) -> int:
        """Retained Yao-Yao source at ``b`` in the Yao cone of ``b`` containing ``toward``."""
        return int(self.incoming[b, self.coneY[b, toward]])

    def theta_edges(self) -> list[tuple[int, int]]:
        return list(map(tuple, self.theta_graph.edges.tolist()))

    def frame(self, a: int, b: int) -> Frame:
        r = int(self.cone6[a, b])
        bc, bs = THETA6.bisector(r)
        dx = self.ps.xy[b, 0] - self.ps.xy[a, 0]
        dy = self.ps.xy[b, 1] - self.ps.xy[a, 1]
        above = bc * dy - bs * dx > 0.0
        return Frame(a, r, bool(above))

    def theta_path(self, s: int, t: int) -> Path:
        ids = self.theta_paths.path(s, t)
        if ids is None:
            raise PreconditionError(f"no Theta_6 path between {s} and {t}")
        return Path.from_ids(self.ps, ids)

    def dist(self, u: int, v: int) -> float:
        return self.ps.dist(u, v)


# --------------------------------------------------------------------------
# Constructive Theta_6 path inside an empty trapezoid
# --------------------------------------------------------------------------

CW, CCW = "cw", "ccw"


@dataclass(frozen=True)
class TrapezoidBound:
    """Geometry of the trapezoid bound for a pair (a, b) and a choice of full side.

    ``side`` names the bounding ray of the cone carrying the full side ``ax``;
    the triangle ``b y z`` cut from the opposite corner must be empty.
    """

    side: str
    x: tuple[float, float]
    y: tuple[float, float]
    z: tuple[float, float]
    o: tuple[float, float]
    side_length: float
    total_bound: float

    @property
    def edge_bound(self) -> float:
        return self.side_length


def trapezoid(ps: PointSet, a: int, b: int, side: str) -> TrapezoidBound:
    tri = canonical_triangle(THETA6, ps[a], ps[b])
    big_x, big_z = (tri.x, tri.z) if side == CW else (tri.z, tri.x)
    L = tri.side_length
    bx, by = map(float, ps.xy[b])
    ax, ay = map(float, ps.xy[a])
    xb = math.hypot(bx - big_x[0], by - big_x[1])
    zb = math.hypot(bx - big_z[0], by - big_z[1])
    # y on a-z with |yz| = |bz|; o on a-x with |ox| = |bx|
    fy = zb / L if L > 0 else 0.0
    fo = xb / L if L > 0 else 0.0
    y = (big_z[0] + (ax - big_z[0]) * fy, big_z[1] + (ay - big_z[1]) * fy)
    o = (big_x[0] + (ax - big_x[0]) * fo, big_x[1] + (ay - big_x[1]) * fo)
    return TrapezoidBound(side, big_x, y, big_z, o, L, L + xb)


def _corner_empty(ps: PointSet, b: int, tb: TrapezoidBound) -> bool:
    return not inside_open_triangle(ps.xy, ps.xy[b], tb.y, tb.z).any()


def trapezoid_side(ps: PointSet, a: int, b: int, side: Optional[str] = None) -> TrapezoidBound:
    """Pick the orientation whose corner triangle is empty (smaller bound first)."""
    sides = (side,) if side is not None else (CW, CCW)
    options = [trapezoid(ps, a, b, s) for s in sides]
    options = [tb for tb in options if _corner_empty(ps, b, tb)]
    if not options:
        raise PreconditionError(f"corner triangle of the trapezoid for ({a}, {b}) is not empty")
    return min(options, key=lambda tb: tb.total_bound)


def _side_toward(ps: PointSet, apex: int, target: int, point) -> str:
    """Side of the Theta cone (apex -> target) whose bounding ray points most toward ``point``."""
    j = int(cone_matrix_pair(ps, apex, target))
    dx = point[0] - ps.xy[apex, 0]
    dy = point[1] - ps.xy[apex, 1]
    r0, r1 = THETA6.ray(j), THETA6.ray(j + 1)
    return CW if dx * r0[0] + dy * r0[1] >= dx * r1[0] + dy * r1[1] else CCW


def cone_matrix_pair(ps: PointSet, a: int, b: int) -> int:
    return cone_index(THETA6, ps.xy[a], ps.xy[b])


def _theta_lookup(theta6: GeometricDigraph) -> np.ndarray:
    if theta6.kind is not GraphKind.THETA or theta6.cone_count != 6:
        raise ValueError("expected a Theta_6 graph")
    return theta_table(theta6.points, 6)


def trapezoid_path(theta6: GeometricDigraph, a: int, b: int,
                   side: Optional[str] = None,
                   table: Optional[np.ndarray] = None) -> Path:
    """Theta_6 path from ``a`` to ``b`` built by following cone edges through an empty trapezoid.

    Each step takes the Theta_6 edge ``a -> u`` of the cone containing the
    target.  If ``u`` falls on the near side of the line through ``b`` parallel
    to ``a z``, the walk continues from ``u`` toward ``b``; otherwise it is
    completed by a walk from ``b`` toward ``u`` traversed backwards.  Requires
    the corner triangle ``b y z`` to be empty (raises ``PreconditionError``).
    Total length is at most ``|ax| + |ay|`` and no edge exceeds ``|ax|``.
    """
    ps = theta6.points
    if table is None:
        table = _theta_lookup(theta6)
    if a == b:
        return Path((a,), 0.0, 0.0)
    trapezoid_side(ps, a, b, side)
    ids = _canonical(ps, table, a, b, side, 0, top=True)
    path = Path.from_ids(ps, ids)
    for u, v in path.edges():
        if not (table[u] == v).any() and not (table[v] == u).any():
            raise RuntimeError(f"constructed step {u}-{v} is not a Theta_6 edge")
    return path


# name used by the public API contract
lemma1_canonical_path = trapezoid_path


def _canonical(ps, table, p, q, side, depth, top=False) -> list[int]:
    if depth > len(ps):
        raise RuntimeError("canonical path recursion exceeded the number of points")
    try:
        tb = trapezoid_side(ps, p, q, side)
    except PreconditionError:
        if top or side is None:
            raise
        # degenerate hand-over: the inherited side has a point on its corner triangle
        tb = trapezoid_side(ps, p, q, None)
    j = cone_matrix_pair(ps, p, q)
    u = int(table[p, j])
    if u < 0:
        raise RuntimeError(f"point {p} has no Theta_6 edge in a non-empty cone")
    if u == q:
        return [p, q]
    bq = (float(ps.xy[q, 0]), float(ps.xy[q, 1]))
    cx = cross(tb.o, bq, tb.x)
    cu = cross(tb.o, bq, ps.xy[u])
    # u beyond (or on) the line through b parallel to a-y: finish from b toward u
    if cx != 0.0 and (cu * cx > 0.0 or cu == 0.0):
        sub = _canonical(ps, table, q, u, _side_toward(ps, q, u, tb.x), depth + 1)
        return [p] + sub[::-1]
    next_side = tb.side if cx != 0.0 and cone_matrix_pair(ps, u, q) == j else None
    return [p] + _canonical(ps, table, u, q, next_side, depth + 1)
