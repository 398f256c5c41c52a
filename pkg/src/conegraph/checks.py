"""Structural invariants of the cone graphs, counted exactly (no tolerances)."""
from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np

from .geometry import THETA6, canonical_triangle, inside_open_triangle
from .graphs import GeometricDigraph, cone_matrix
from .metrics import degree_stats
from .paths import SpannerContext


@dataclass(frozen=True)
class StructureReport:
    yy_not_in_yao: int
    degree_excess: int
    cone_collisions: int
    occupied_triangles: int
    incoming_collisions: int = 0

    @property
    def passed(self) -> bool:
        return not (self.yy_not_in_yao or self.degree_excess or self.cone_collisions
                    or self.occupied_triangles or self.incoming_collisions)

    def to_dict(self) -> dict:
        return {**asdict(self), "passed": self.passed}


def cone_collisions(g: GeometricDigraph) -> int:
    """Number of (source, cone) slots holding more than one outgoing edge."""
    if len(g) == 0:
        return 0
    cones = cone_matrix(g.points, g.cone_count)[g.edges[:, 0], g.edges[:, 1]]
    _, counts = np.unique(np.column_stack((g.edges[:, 0], cones)), axis=0, return_counts=True)
    return int((counts - 1).clip(min=0).sum())


def incoming_collisions(g: GeometricDigraph) -> int:
    """Number of (target, cone of target) slots receiving more than one edge."""
    if len(g) == 0:
        return 0
    cones = cone_matrix(g.points, g.cone_count)[g.edges[:, 1], g.edges[:, 0]]
    _, counts = np.unique(np.column_stack((g.edges[:, 1], cones)), axis=0, return_counts=True)
    return int((counts - 1).clip(min=0).sum())


def occupied_triangles(theta6: GeometricDigraph) -> int:
    """Theta_6 edges ``ab`` whose canonical triangle T(a, b) has a point in its interior."""
    ps = theta6.points
    bad = 0
    for a, b in theta6.edges.tolist():
        tri = canonical_triangle(THETA6, ps[a], ps[b])
        bad += bool(inside_open_triangle(ps.xy, *tri.vertices).any())
    return bad


def structure_report(ctx: SpannerContext) -> StructureReport:
    yy, yao = ctx.yy_graph, ctx.yao_graph
    deg = degree_stats(yy)
    return StructureReport(
        yy_not_in_yao=len(yy.edge_set - yao.edge_set),
        degree_excess=int((deg.total_degree > 2 * ctx.c).sum()),
        cone_collisions=cone_collisions(yy) + cone_collisions(yao) + cone_collisions(ctx.theta_graph),
        occupied_triangles=occupied_triangles(ctx.theta_graph),
        incoming_collisions=incoming_collisions(yy),
    )
