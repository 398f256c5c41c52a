"""Theta, Yao, Yao-Yao and half-Theta_6 digraphs over a point set.

All constructions break ties towards the smallest point id, so the edge set
is a pure function of the coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from . import kernels
from .geometry import ConeSystem, PointSet


class GraphKind(str, Enum):
    THETA = "theta"
    YAO = "yao"
    YAOYAO = "yaoyao"
    HALF_THETA6 = "halftheta6"

    @classmethod
    def parse(cls, value) -> "GraphKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "").replace("_", "")
        for kind in cls:
            if kind.value == key:
                return kind
        raise ValueError(f"unknown graph kind {value!r}")


@dataclass(frozen=True, eq=False)
class GeometricDigraph:
    kind: GraphKind
    cone_count: int
    points: PointSet
    edges: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "kind", GraphKind.parse(self.kind))
        e = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        n = len(self.points)
        if e.size:
            if e.min() < 0 or e.max() >= n:
                raise ValueError("edge endpoint out of range")
            if np.any(e[:, 0] == e[:, 1]):
                raise ValueError("self-loops are not allowed")
            e = np.unique(e, axis=0)
        e.setflags(write=False)
        object.__setattr__(self, "edges", e)

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(map(tuple, self.edges.tolist()))

    def __contains__(self, edge) -> bool:
        return tuple(edge) in self.edge_set

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GeometricDigraph) and self.kind == other.kind
                and self.cone_count == other.cone_count and self.points == other.points
                and np.array_equal(self.edges, other.edges))

    __hash__ = None

    @cached_property
    def lengths(self) -> np.ndarray:
        d = self.points.xy[self.edges[:, 1]] - self.points.xy[self.edges[:, 0]]
        return np.sqrt(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1])

    def with_edges(self, edges) -> "GeometricDigraph":
        return GeometricDigraph(self.kind, self.cone_count, self.points, edges)

    def undirected_csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """CSR adjacency of the undirected view, Euclidean weights, no duplicate edges."""
        n = self.n
        if len(self.edges) == 0:
            return np.zeros(n + 1, np.int64), np.zeros(0, np.int64), np.zeros(0)
        lo = np.minimum(self.edges[:, 0], self.edges[:, 1])
        hi = np.maximum(self.edges[:, 0], self.edges[:, 1])
        und = np.unique(np.column_stack((lo, hi)), axis=0)
        src = np.concatenate((und[:, 0], und[:, 1]))
        dst = np.concatenate((und[:, 1], und[:, 0]))
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        d = self.points.xy[dst] - self.points.xy[src]
        w = np.sqrt(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1])
        indptr = np.zeros(n + 1, np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return indptr, dst.astype(np.int64), w

    def undirected_neighbors(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges.tolist():
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs


def _check(ps: PointSet, c: int) -> ConeSystem:
    if len(ps) < 1:
        raise ValueError("need at least one point")
    return ConeSystem(c)


def _table_edges(table: np.ndarray) -> np.ndarray:
    src, slot = np.nonzero(table >= 0)
    return np.column_stack((src, table[src, slot])).astype(np.int64)


def cone_matrix(ps: PointSet, c: int) -> np.ndarray:
    """``out[a, p]`` is the cone of apex ``a`` holding ``p``; -1 on the diagonal."""
    csys = _check(ps, c)
    return kernels.cone_matrix(ps.xy, csys.alpha, csys.cone_count)


def theta_table(ps: PointSet, c: int) -> np.ndarray:
    """``out[a, j]``: Theta neighbour of ``a`` in cone ``j`` or -1."""
    csys = _check(ps, c)
    bc, bs = csys.bisectors
    return kernels.theta_targets(ps.xy, csys.alpha, csys.cone_count, bc, bs)


def yao_table(ps: PointSet, c: int) -> np.ndarray:
    csys = _check(ps, c)
    return kernels.yao_targets(ps.xy, csys.alpha, csys.cone_count)


def yaoyao_tables(ps: PointSet, c: int, yao: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Yao-Yao out-table plus ``incoming[v, j]``, the retained source in cone ``j`` of ``v``."""
    csys = _check(ps, c)
    if yao is None:
        yao = yao_table(ps, c)
    return kernels.yaoyao_filter(ps.xy, csys.alpha, csys.cone_count, yao)


def build_theta(ps: PointSet, c: int) -> GeometricDigraph:
    return GeometricDigraph(GraphKind.THETA, c, ps, _table_edges(theta_table(ps, c)))


def build_yao(ps: PointSet, c: int) -> GeometricDigraph:
    return GeometricDigraph(GraphKind.YAO, c, ps, _table_edges(yao_table(ps, c)))


def build_yao_yao(ps: PointSet, c: int) -> GeometricDigraph:
    """Yao graph with a second Yao step on the incoming edges of every cone.

    For each node and each of its cones, only the shortest incoming Yao edge
    whose source lies in that cone survives (ties to the smaller source id).
    """
    yy, _ = yaoyao_tables(ps, c)
    return GeometricDigraph(GraphKind.YAOYAO, c, ps, _table_edges(yy))


def build_half_theta6(ps: PointSet) -> GeometricDigraph:
    """Theta_6 edges whose cone at the source has even index (cones 0, 2, 4)."""
    table = theta_table(ps, 6).copy()
    table[:, 1::2] = -1
    return GeometricDigraph(GraphKind.HALF_THETA6, 6, ps, _table_edges(table))


def build_graph(kind, ps: PointSet, c: int) -> GeometricDigraph:
    kind = GraphKind.parse(kind)
    if kind is GraphKind.THETA:
        return build_theta(ps, c)
    if kind is GraphKind.YAO:
        return build_yao(ps, c)
    if kind is GraphKind.YAOYAO:
        return build_yao_yao(ps, c)
    if c != 6:
        raise ValueError("half-Theta_6 uses exactly 6 cones")
    return build_half_theta6(ps)
