"""Planar primitives shared by the graph constructions and the path bounds.

Cone convention: with ``c`` cones of angle ``alpha = 2*pi/c``, cone ``j``
(0-based) is the half-open sector ``[j*alpha, (j+1)*alpha)`` measured
counter-clockwise from the positive x-axis.  It contains its clockwise
bounding ray and excludes the counter-clockwise one.  Index ``j`` is the
``(j+1)``-th cone met when sweeping counter-clockwise from the x-axis, so
the six Theta cones ``0..5`` are the usual ``C1..C6``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

TWO_PI = 2.0 * math.pi
_SQRT3_2 = math.sqrt(3.0) / 2.0
_COS30 = math.cos(math.pi / 6.0)
# cos/sin of j*pi/3, exact where the value is representable
_SIXTH_TURN = ((1.0, 0.0), (0.5, _SQRT3_2), (-0.5, _SQRT3_2),
               (-1.0, 0.0), (-0.5, -_SQRT3_2), (0.5, -_SQRT3_2))


class DegenerateDirectionError(ValueError):
    """Raised when a direction is requested between coincident points."""


class Point(NamedTuple):
    id: int
    x: float
    y: float


XY = Union[Point, Sequence[float], np.ndarray]


def _xy(p: XY) -> tuple[float, float]:
    if isinstance(p, Point):
        return p.x, p.y
    return float(p[0]), float(p[1])


@dataclass(frozen=True, eq=False)
class PointSet:
    """Duplicate-free planar points; ids are row indices of ``xy``."""

    xy: np.ndarray

    def __post_init__(self):
        xy = np.array(self.xy, dtype=np.float64, copy=True)
        if xy.ndim != 2 or xy.shape[1] != 2:
            if xy.size == 0:
                xy = xy.reshape(0, 2)
            else:
                raise ValueError(f"expected an (n, 2) coordinate array, got shape {xy.shape}")
        if not np.all(np.isfinite(xy)):
            raise ValueError("coordinates must be finite")
        seen: dict[tuple[float, float], int] = {}
        for i, (x, y) in enumerate(xy.tolist()):
            # +0.0 and -0.0 are the same location
            key = (x + 0.0, y + 0.0)
            if key in seen:
                raise ValueError(f"points {seen[key]} and {i} share coordinates {key}")
            seen[key] = i
        xy.setflags(write=False)
        object.__setattr__(self, "xy", xy)

    @classmethod
    def from_points(cls, coords: Iterable[Sequence[float]]) -> "PointSet":
        return cls(np.array([list(map(float, c)) for c in coords], dtype=np.float64).reshape(-1, 2))

    def __len__(self) -> int:
        return self.xy.shape[0]

    def __getitem__(self, i: int) -> Point:
        x, y = self.xy[i]
        return Point(int(i), float(x), float(y))

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and np.array_equal(self.xy, other.xy)

    __hash__ = None

    @property
    def points(self) -> list[Point]:
        return list(self)

    def dist(self, i: int, j: int) -> float:
        dx = self.xy[j, 0] - self.xy[i, 0]
        dy = self.xy[j, 1] - self.xy[i, 1]
        return math.sqrt(dx * dx + dy * dy)


@dataclass(frozen=True)
class ConeSystem:
    cone_count: int

    def __post_init__(self):
        if int(self.cone_count) != self.cone_count or self.cone_count < 2:
            raise ValueError(f"cone_count must be an integer >= 2, got {self.cone_count!r}")

    @property
    def alpha(self) -> float:
        return TWO_PI / self.cone_count

    @cached_property
    def bisectors(self) -> tuple[np.ndarray, np.ndarray]:
        """Unit bisector directions of every cone, as (cos, sin) arrays."""
        ang = [(j + 0.5) * self.alpha for j in range(self.cone_count)]
        return np.array([math.cos(t) for t in ang]), np.array([math.sin(t) for t in ang])

    def ray(self, j: int) -> tuple[float, float]:
        """Unit vector of the clockwise (included) bounding ray of cone ``j``."""
        j %= self.cone_count
        if (6 * j) % self.cone_count == 0:
            return _SIXTH_TURN[(6 * j) // self.cone_count]
        ang = j * self.alpha
        return math.cos(ang), math.sin(ang)

    def bisector(self, j: int) -> tuple[float, float]:
        bc, bs = self.bisectors
        j %= self.cone_count
        return float(bc[j]), float(bs[j])


THETA6 = ConeSystem(6)


def _as_csys(csys: Union[ConeSystem, int]) -> ConeSystem:
    return csys if isinstance(csys, ConeSystem) else ConeSystem(int(csys))


def direction_cone(dx: float, dy: float, csys: ConeSystem) -> int:
    if dx == 0.0 and dy == 0.0:
        raise DegenerateDirectionError("degenerate direction")
    theta = math.atan2(dy, dx)
    if theta < 0.0:
        theta += TWO_PI
    return min(int(math.floor(theta / csys.alpha)), csys.cone_count - 1)


def cone_index(csys: Union[ConeSystem, int], origin: XY, target: XY) -> int:
    """Index of the cone with apex ``origin`` that contains ``target``."""
    csys = _as_csys(csys)
    ox, oy = _xy(origin)
    tx, ty = _xy(target)
    return direction_cone(tx - ox, ty - oy, csys)


def bisector_projection_distance(csys: Union[ConeSystem, int], apex: XY, p: XY) -> float:
    """Distance from ``apex`` to the projection of ``p`` on the bisector of its cone."""
    csys = _as_csys(csys)
    ax, ay = _xy(apex)
    px, py = _xy(p)
    dx, dy = px - ax, py - ay
    bc, bs = csys.bisector(direction_cone(dx, dy, csys))
    return dx * bc + dy * bs


@dataclass(frozen=True)
class CanonicalTriangle:
    """Open equilateral triangle T(a, b) of the Theta_6 cone of ``apex`` holding ``far_side_through``.

    ``x`` sits on the clockwise bounding ray, ``z`` on the counter-clockwise one.
    """

    apex: Point
    far_side_through: Point
    cone: int
    height: float
    x: tuple[float, float]
    z: tuple[float, float]

    @property
    def side_length(self) -> float:
        return self.height / _COS30

    @property
    def vertices(self) -> tuple[tuple[float, float], tuple[float, float], tuple[float, float]]:
        return (self.apex.x, self.apex.y), self.x, self.z

    @property
    def centroid(self) -> tuple[float, float]:
        (ax, ay), (xx, xy), (zx, zy) = self.vertices
        return (ax + xx + zx) / 3.0, (ay + xy + zy) / 3.0


def _point(p: XY, default_id: int = -1) -> Point:
    if isinstance(p, Point):
        return p
    x, y = _xy(p)
    return Point(default_id, x, y)


def canonical_triangle(csys6: Union[ConeSystem, int], a: XY, b: XY) -> CanonicalTriangle:
    csys6 = _as_csys(csys6)
    if csys6.cone_count != 6:
        raise ValueError("canonical triangles are defined for the six-cone system")
    a, b = _point(a), _point(b)
    dx, dy = b.x - a.x, b.y - a.y
    j = direction_cone(dx, dy, csys6)
    bc, bs = csys6.bisector(j)
    height = dx * bc + dy * bs
    side = height / _COS30
    r0 = csys6.ray(j)
    r1 = csys6.ray(j + 1)
    return CanonicalTriangle(
        apex=a, far_side_through=b, cone=j, height=height,
        x=(a.x + side * r0[0], a.y + side * r0[1]),
        z=(a.x + side * r1[0], a.y + side * r1[1]),
    )


# Inward margin, relative to the triangle's size, below which a point counts as
# on the boundary.  Keeps rounded vertices and on-side points out of the interior.
BOUNDARY_MARGIN = 1e-12


def inside_open_triangle(pts: np.ndarray, t0: XY, t1: XY, t2: XY,
                         margin: float = BOUNDARY_MARGIN) -> np.ndarray:
    """Vectorised strict-interior test of ``pts`` (shape (m, 2)) against triangle t0 t1 t2."""
    verts = np.array([_xy(t0), _xy(t1), _xy(t2)], dtype=np.float64)
    pts = np.asarray(pts, dtype=np.float64).reshape(-1, 2)
    e = np.roll(verts, -1, axis=0) - verts
    cross = e[0, 0] * e[2, 1] - e[0, 1] * e[2, 0]
    if cross == 0.0:
        return np.zeros(len(pts), dtype=bool)
    sign = 1.0 if cross < 0 else -1.0  # orient counter-clockwise
    lengths = np.hypot(e[:, 0], e[:, 1])
    tol = margin * lengths.max()
    inside = np.ones(len(pts), dtype=bool)
    for k in range(3):
        rel = pts - verts[k]
        signed = sign * (e[k, 0] * rel[:, 1] - e[k, 1] * rel[:, 0]) / lengths[k]
        inside &= signed > tol
    return inside


def strictly_inside(tri: CanonicalTriangle, p: XY) -> bool:
    """True iff ``p`` lies in the open interior of ``tri`` (boundary excluded)."""
    if tri.height <= 0.0:
        return False
    return bool(inside_open_triangle(np.array([_xy(p)]), *tri.vertices)[0])


def rotate_frame(ps: PointSet, sixths: int) -> PointSet:
    """Rotate every point by ``sixths * pi/3`` about the origin."""
    c, s = _SIXTH_TURN[sixths % 6]
    x, y = ps.xy[:, 0], ps.xy[:, 1]
    return PointSet(np.column_stack((c * x - s * y, s * x + c * y)))


def reflect_frame(ps: PointSet, axis_angle: float) -> PointSet:
    """Mirror every point across the line through the origin at ``axis_angle``."""
    c, s = math.cos(2.0 * axis_angle), math.sin(2.0 * axis_angle)
    x, y = ps.xy[:, 0], ps.xy[:, 1]
    return PointSet(np.column_stack((c * x + s * y, s * x - c * y)))


def foot_of_perpendicular(p: XY, a: XY, b: XY) -> tuple[float, float]:
    """Orthogonal projection of ``p`` onto the line through ``a`` and ``b``."""
    px, py = _xy(p)
    ax, ay = _xy(a)
    bx, by = _xy(b)
    ux, uy = bx - ax, by - ay
    t = ((px - ax) * ux + (py - ay) * uy) / (ux * ux + uy * uy)
    return ax + t * ux, ay + t * uy


def line_intersection(p1: XY, p2: XY, q1: XY, q2: XY) -> tuple[float, float] | None:
    """Intersection of lines p1p2 and q1q2, or None when parallel."""
    x1, y1 = _xy(p1)
    x2, y2 = _xy(p2)
    x3, y3 = _xy(q1)
    x4, y4 = _xy(q2)
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if den == 0.0:
        return None
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    return x1 + t * (x2 - x1), y1 + t * (y2 - y1)


def cross(o: XY, p: XY, q: XY) -> float:
    """z-component of (p - o) x (q - o); positive when q is counter-clockwise of p."""
    ox, oy = _xy(o)
    px, py = _xy(p)
    qx, qy = _xy(q)
    return (px - ox) * (qy - oy) - (py - oy) * (qx - ox)


def distance(p: XY, q: XY) -> float:
    px, py = _xy(p)
    qx, qy = _xy(q)
    dx, dy = qx - px, qy - py
    return math.sqrt(dx * dx + dy * dy)
