"""Yao-Yao replacement paths for Theta_6 edges.

For a Theta_6 edge ``a -> b`` the extraction returns a walk in YY_6k built by
induction on edge length:

* ``ab`` already in YY_6k: the edge itself.
* otherwise take ``b'``, the Yao neighbour of ``a`` in the Yao cone holding
  ``b`` (``b' = b`` when ``ab`` is a Yao edge), and ``a'``, the source of the
  incoming Yao-Yao edge kept at ``b'`` in the cone holding ``a`` (``a' = a``
  when ``ab'`` survives the filter).  The result is
  ``path(a, a') + a'b' + path(b', b)`` where both outer pieces are shortest
  Theta_6 paths whose edges are expanded recursively.

Every expanded Theta_6 edge must be strictly shorter than its parent, which
bounds the recursion.  The cone of ``a'`` as seen from ``a`` (in the frame
where ``ab`` lies in cone 0, on or below the bisector) selects one of four
cases, each with its own bound on the Theta_6 piece ``path(a, a')``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .geometry import PointSet, distance, foot_of_perpendicular
from .metrics import THETA6_EDGE_WITNESS_FACTOR
from .paths import REL_TOL, Path, PreconditionError, SpannerContext

IN_YY = "InYY"
CASE1, CASE2, CASE3, CASE4 = "Case1", "Case2", "Case3", "Case4"
SPECIAL_AB_IN_Y = "Special-abInY"
SPECIAL_ABP_IN_YY = "Special-ab'InYY"
_CASE_BY_CONE = {1: CASE1, 2: CASE2, 4: CASE3, 5: CASE4}

SQRT3 = math.sqrt(3.0)


class WitnessError(RuntimeError):
    pass


class DescentViolation(WitnessError):
    def __init__(self, parent, child, parent_len, child_len):
        super().__init__(
            f"descent violation: sub-edge {child} (|{child_len:.17g}|) "
            f"is not shorter than {parent} (|{parent_len:.17g}|)")
        self.parent, self.child = parent, child


@dataclass(frozen=True)
class BoundCheck:
    value: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.value <= self.bound * (1.0 + REL_TOL)

    def to_dict(self) -> dict:
        return {"value": self.value, "bound": self.bound, "ok": self.ok}


@dataclass
class CaseNode:
    edge: tuple[int, int]
    tags: tuple[str, ...]
    a_prime: Optional[int] = None
    b_prime: Optional[int] = None
    checks: dict[str, BoundCheck] = field(default_factory=dict)
    children: list["CaseNode"] = field(default_factory=list)

    def walk(self) -> Iterable["CaseNode"]:
        yield self
        for ch in self.children:
            yield from ch.walk()

    def tag_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for node in self.walk():
            for t in node.tags:
                counts[t] = counts.get(t, 0) + 1
        return counts

    def depth(self) -> int:
        return 1 + max((ch.depth() for ch in self.children), default=0)

    def to_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "tags": list(self.tags),
            "a_prime": self.a_prime,
            "b_prime": self.b_prime,
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
            "children": [ch.to_dict() for ch in self.children],
        }


@dataclass(frozen=True)
class WitnessCertificate:
    theta_edge: tuple[int, int]
    yy_path: Path
    case_trace: CaseNode
    edge_length: float
    factor: float = THETA6_EDGE_WITNESS_FACTOR

    @property
    def bound(self) -> float:
        return self.factor * self.edge_length

    @property
    def ratio(self) -> float:
        return self.yy_path.total_length / self.edge_length

    @property
    def satisfied(self) -> bool:
        return self.yy_path.total_length <= self.bound * (1.0 + REL_TOL)

    def to_dict(self) -> dict:
        return {
            "theta_edge": list(self.theta_edge),
            "path": list(self.yy_path.ids),
            "length": self.yy_path.total_length,
            "edge_length": self.edge_length,
            "bound": self.bound,
            "ratio": self.ratio,
            "satisfied": self.satisfied,
            "trace": self.case_trace.to_dict(),
        }


def lemma_bound_aa1(a_b: float, alpha: float) -> float:
    return 4.0 / SQRT3 * a_b * math.sin(alpha)


def lemma_bound_aa2(a_b: float, alpha: float) -> float:
    m = max(math.sqrt(2.0),
            2.0 * math.sin(math.pi / 6 + alpha) / (SQRT3 * math.tan(math.pi / 6 - alpha)))
    return a_b * math.sin(alpha) * (1.0 + m)


def lemma_bound_aa3(ah: float, a_h: float) -> float:
    return ah + (1.0 + 2.0 / SQRT3) * a_h


class WitnessExtractor:
    """Memoised witness extraction over one point set and one ``k``."""

    def __init__(self, ps: PointSet, k: int, ctx: Optional[SpannerContext] = None):
        if k < 1:
            raise ValueError("k must be >= 1")
        self.ctx = ctx if ctx is not None else SpannerContext(ps, k)
        self.ps = self.ctx.ps
        self._memo: dict[tuple[int, int], tuple[Path, CaseNode]] = {}

    def extract(self, a: int, b: int) -> WitnessCertificate:
        if not self.ctx.in_theta(a, b):
            raise PreconditionError(f"({a}, {b}) is not an edge of Theta_6")
        path, node = self._expand(a, b)
        return WitnessCertificate((a, b), path, node, self.ctx.dist(a, b))

    def extract_all(self) -> list[WitnessCertificate]:
        return [self.extract(a, b) for a, b in self.ctx.theta_edges()]

    def _theta_piece(self, s: int, t: int, parent: tuple[int, int], limit: float
                     ) -> tuple[Path, Path, list[CaseNode]]:
        """Shortest Theta_6 path s..t and its Yao-Yao expansion."""
        ctx = self.ctx
        tp = ctx.theta_path(s, t)
        out = Path((s,), 0.0, 0.0)
        nodes = []
        for x, y in tp.edges():
            length = ctx.dist(x, y)
            if not length < limit:
                raise DescentViolation(parent, (x, y), limit, length)
            if ctx.in_theta(x, y):
                sub, node = self._expand(x, y)
            else:
                sub, node = self._expand(y, x)
                sub = sub.reversed()
            out = out + sub
            nodes.append(node)
        return tp, out, nodes

    def _expand(self, a: int, b: int) -> tuple[Path, CaseNode]:
        key = (a, b)
        if key in self._memo:
            return self._memo[key]
        ctx, ps = self.ctx, self.ps
        if ctx.in_yy(a, b):
            result = (Path.from_ids(ps, (a, b)), CaseNode(key, (IN_YY,)))
            self._memo[key] = result
            return result

        ab = ctx.dist(a, b)
        tags: list[str] = []
        if ctx.in_yao(a, b):
            bp = b
            tags.append(SPECIAL_AB_IN_Y)
        else:
            bp = ctx.yao_target(a, b)
        frame = ctx.frame(a, b)
        if bp != b and ctx.in_yy(a, bp):
            ap = a
            tags.append(SPECIAL_ABP_IN_YY)
        else:
            ap = ctx.yy_source(bp, a)
            rel = frame.theta_cone(int(ctx.cone6[a, ap]))
            case = _CASE_BY_CONE.get(rel)
            if case is None:
                raise WitnessError(
                    f"edge {key}: a'={ap} lies in Theta cone {rel} of a in the normalised frame")
            tags.append(case)
        node = CaseNode(key, tuple(tags), a_prime=ap, b_prime=bp)

        pieces = []
        if ap != a:
            tp, yp, kids = self._theta_piece(a, ap, key, ab)
            pieces.append(yp)
            node.children.extend(kids)
            self._record_aa(node, a, b, ap, bp, tp)
        else:
            pieces.append(Path((a,), 0.0, 0.0))
        if not ctx.in_yy(ap, bp):
            raise WitnessError(f"edge {key}: expected ({ap}, {bp}) in YY_{ctx.c}")
        pieces.append(Path.from_ids(ps, (ap, bp)))
        if bp != b:
            tp, yp, kids = self._theta_piece(bp, b, key, ab)
            pieces.append(yp)
            node.children.extend(kids)
            e = foot_of_perpendicular(ps.xy[bp], ps.xy[a], ps.xy[b])
            node.checks["L-bb"] = BoundCheck(tp.total_length, SQRT3 * distance(ps.xy[bp], e))

        path = pieces[0]
        for p in pieces[1:]:
            path = path + p
        self._memo[key] = (path, node)
        return path, node

    def _record_aa(self, node: CaseNode, a, b, ap, bp, tp: Path) -> None:
        ps, alpha = self.ps, self.ctx.alpha
        a_b = self.ctx.dist(ap, bp)
        tag = node.tags[-1]
        if tag == CASE1:
            node.checks["L-aa2"] = BoundCheck(tp.total_length, lemma_bound_aa2(a_b, alpha))
        elif tag in (CASE2, CASE3):
            node.checks["L-aa1"] = BoundCheck(tp.total_length, lemma_bound_aa1(a_b, alpha))
        elif tag == CASE4:
            h = foot_of_perpendicular(ps.xy[ap], ps.xy[a], ps.xy[b])
            bound = lemma_bound_aa3(distance(ps.xy[a], h), distance(ps.xy[ap], h))
            node.checks["L-aa3"] = BoundCheck(tp.total_length, bound)


def extract_witness(ps: PointSet, k: int, theta_edge: tuple[int, int]) -> WitnessCertificate:
    if k < 6:
        raise ValueError("witness paths are certified for k >= 6")
    return WitnessExtractor(ps, k).extract(*theta_edge)
