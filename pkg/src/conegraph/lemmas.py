"""Empirical checks of the four Theta_6 path bounds used by the witness extraction.

Each validator enumerates every role assignment (a, b, a', b') of a point set
that meets a lemma's hypotheses, measures the shortest Theta_6 path between
the lemma's endpoints, and compares it with the closed-form bound.

====== ===================================================== ==============
id     hypotheses (frame: ab in cone 0, on/below bisector)   measured path
====== ===================================================== ==============
L-bb   ab in Theta_6; ab' in Y_6k in the Yao cone of b       b' .. b
L-aa1  ab' in Y_6k (frame of ab'); a'b' in YY_6k; a' in      a .. a'
       relative Theta cone 2 or 4
L-aa2  as L-bb, plus a'b' in YY_6k with a' in cone 1         a' .. a
L-aa3  as L-aa2 but a' in cone 5 and below ab'; k > 2        a' .. a
====== ===================================================== ==============
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .geometry import PointSet, cross, distance, foot_of_perpendicular, line_intersection
from .paths import REL_TOL, SpannerContext
from .witness import SQRT3, lemma_bound_aa1, lemma_bound_aa2, lemma_bound_aa3

LEMMA_IDS = ("L-bb", "L-aa1", "L-aa2", "L-aa3")


@dataclass(frozen=True)
class LemmaMatch:
    a: int
    b: Optional[int]
    a_prime: Optional[int]
    b_prime: int
    length: float
    bound: float
    max_edge: float
    edge_limit: Optional[float]

    @property
    def within_bound(self) -> bool:
        return self.length <= self.bound * (1.0 + REL_TOL)

    @property
    def edges_ok(self) -> bool:
        return self.edge_limit is None or self.max_edge < self.edge_limit * (1.0 + REL_TOL)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "a_prime": self.a_prime, "b_prime": self.b_prime,
                "length": self.length, "bound": self.bound, "max_edge": self.max_edge,
                "edge_limit": self.edge_limit}


@dataclass
class ValidationReport:
    lemma: str
    k: int
    matches: list[LemmaMatch] = field(default_factory=list)
    degenerate: int = 0

    @property
    def violations(self) -> list[LemmaMatch]:
        return [m for m in self.matches if not m.within_bound]

    @property
    def edge_violations(self) -> list[LemmaMatch]:
        return [m for m in self.matches if not m.edges_ok]

    @property
    def passed(self) -> bool:
        return not self.violations and not self.edge_violations

    @property
    def max_ratio(self) -> float:
        """Largest measured/bound ratio over matches (0 when vacuous)."""
        return max((m.length / m.bound for m in self.matches if m.bound > 0), default=0.0)

    @property
    def min_slack(self) -> float:
        return min((m.bound - m.length for m in self.matches), default=math.inf)

    def merge(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.lemma, self.k, self.matches + other.matches,
                                self.degenerate + other.degenerate)

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "k": self.k,
            "matches": len(self.matches),
            "violations": [m.to_dict() for m in self.violations],
            "edge_violations": [m.to_dict() for m in self.edge_violations],
            "degenerate": self.degenerate,
            "max_ratio": self.max_ratio,
            "min_slack": None if math.isinf(self.min_slack) else self.min_slack,
            "passed": self.passed,
        }


def _match(ctx: SpannerContext, s: int, t: int, bound: float, a, b, ap, bp,
           edge_limit: Optional[float]) -> LemmaMatch:
    p = ctx.theta_path(s, t)
    return LemmaMatch(a, b, ap, bp, p.total_length, bound, p.max_edge_length, edge_limit)


def _bb(ctx: SpannerContext, rep: ValidationReport) -> None:
    xy = ctx.ps.xy
    for a, b in ctx.theta_edges():
        bp = ctx.yao_target(a, b)
        if bp == b:
            continue
        e = foot_of_perpendicular(xy[bp], xy[a], xy[b])
        ab = ctx.dist(a, b)
        rep.matches.append(_match(ctx, bp, b, SQRT3 * distance(xy[bp], e), a, b, None, bp, ab))


def _aa1(ctx: SpannerContext, rep: ValidationReport) -> None:
    for a in range(ctx.n):
        for bp in ctx.yao[a]:
            bp = int(bp)
            if bp < 0:
                continue
            ap = ctx.yy_source(bp, a)
            if ap == a:
                continue
            if ap < 0:
                rep.degenerate += 1
                continue
            frame = ctx.frame(a, bp)
            if frame.reflected:
                # the hypotheses only fix ab' to cone 0; undo the mirror so cones 2 and 4 keep their labels
                frame = type(frame)(frame.apex, frame.rotation, False)
            if frame.theta_cone(int(ctx.cone6[a, ap])) not in (2, 4):
                continue
            bound = lemma_bound_aa1(ctx.dist(ap, bp), ctx.alpha)
            rep.matches.append(_match(ctx, a, ap, bound, a, None, ap, bp, None))


def _aa_quads(ctx: SpannerContext, rep: ValidationReport, cone: int):
    """(a, b, a', b', frame) with a' in relative Theta cone ``cone`` of a, all four distinct."""
    for a, b in ctx.theta_edges():
        bp = ctx.yao_target(a, b)
        if bp == b:
            continue
        ap = ctx.yy_source(bp, a)
        if ap == a:
            continue
        if ap < 0 or ap == b:
            rep.degenerate += 1
            continue
        frame = ctx.frame(a, b)
        if frame.theta_cone(int(ctx.cone6[a, ap])) != cone:
            continue
        yield a, b, ap, bp, frame


def _aa2(ctx: SpannerContext, rep: ValidationReport) -> None:
    for a, b, ap, bp, _ in _aa_quads(ctx, rep, 1):
        bound = lemma_bound_aa2(ctx.dist(ap, bp), ctx.alpha)
        rep.matches.append(_match(ctx, ap, a, bound, a, b, ap, bp, ctx.dist(a, b)))


def _aa3(ctx: SpannerContext, rep: ValidationReport) -> None:
    xy = ctx.ps.xy
    for a, b, ap, bp, frame in _aa_quads(ctx, rep, 5):
        side = frame.orientation(cross(xy[a], xy[bp], xy[ap]))
        if side == 0.0 or line_intersection(xy[ap], xy[bp], xy[a], xy[b]) is None:
            rep.degenerate += 1
            continue
        if side > 0.0:
            continue
        h = foot_of_perpendicular(xy[ap], xy[a], xy[b])
        bound = lemma_bound_aa3(distance(xy[a], h), distance(xy[ap], h))
        rep.matches.append(_match(ctx, ap, a, bound, a, b, ap, bp, ctx.dist(a, b)))


_VALIDATORS = {"L-bb": _bb, "L-aa1": _aa1, "L-aa2": _aa2, "L-aa3": _aa3}


def validate_lemma_bounds(ps: Union[PointSet, SpannerContext], k: int, which: str
                          ) -> ValidationReport:
    """Check one lemma's bound on every matching configuration of ``ps`` with 6k Yao cones."""
    if which not in _VALIDATORS:
        raise ValueError(f"unknown lemma id {which!r}; expected one of {LEMMA_IDS}")
    min_k = 3 if which == "L-aa3" else 2
    if k < min_k:
        raise ValueError(f"{which} needs k >= {min_k}")
    if isinstance(ps, SpannerContext):
        if ps.k != k:
            raise ValueError("context was built for a different k")
        ctx = ps
    else:
        ctx = SpannerContext(ps, k)
    rep = ValidationReport(which, k)
    _VALIDATORS[which](ctx, rep)
    return rep


def validate_all(ps: Union[PointSet, SpannerContext], k: int) -> dict[str, ValidationReport]:
    ctx = ps if isinstance(ps, SpannerContext) else SpannerContext(ps, k)
    return {lid: validate_lemma_bounds(ctx, k, lid) for lid in LEMMA_IDS
            if not (lid == "L-aa3" and k < 3)}
