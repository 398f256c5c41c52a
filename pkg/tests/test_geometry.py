import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conegraph.geometry import (
    THETA6,
    ConeSystem,
    DegenerateDirectionError,
    PointSet,
    bisector_projection_distance,
    canonical_triangle,
    cone_index,
    rotate_frame,
    strictly_inside,
)
from conegraph.gen import uniform
from conegraph.graphs import build_theta, build_yao_yao

import oracles

coord = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


def test_cone_index_axis_directions():
    assert cone_index(6, (0, 0), (1, 0)) == 0
    assert cone_index(6, (0, 0), (0, 1)) == 1
    assert cone_index(6, (0, 0), (-1, 0)) == 3
    assert cone_index(6, (0, 0), (0, -1)) == 4


def test_cone_index_small_offset_past_ray():
    t = math.radians(10.01)
    assert cone_index(36, (0, 0), (math.cos(t), math.sin(t))) == 1


def test_cone_index_matches_interval_oracle_on_sweep():
    csys = ConeSystem(36)
    for i in range(10_000):
        t = 2 * math.pi * i / 10_000 + 1e-7
        p = (math.cos(t), math.sin(t))
        assert cone_index(csys, (0, 0), p) == oracles.cone_of((0, 0), p, 36)


def test_cone_index_coincident_points():
    with pytest.raises(DegenerateDirectionError, match="degenerate direction"):
        cone_index(6, (0.5, 0.5), (0.5, 0.5))


@given(coord, coord, st.integers(2, 72))
def test_exactly_one_cone(dx, dy, c):
    assume((dx, dy) != (0.0, 0.0))
    j = cone_index(c, (0, 0), (dx, dy))
    assert 0 <= j < c


@given(st.floats(0, 2 * math.pi), st.integers(2, 72))
def test_neighbouring_direction_one_cone_over(theta, c):
    alpha = 2 * math.pi / c
    # stay clear of the rays so that rounding cannot change the answer
    frac = (theta / alpha) % 1.0
    assume(1e-6 < frac < 1 - 1e-6)
    j0 = cone_index(c, (0, 0), (math.cos(theta), math.sin(theta)))
    j1 = cone_index(c, (0, 0), (math.cos(theta + alpha), math.sin(theta + alpha)))
    assert j1 == (j0 + 1) % c


def test_cone_system_alpha():
    for c in (2, 6, 7, 36, 48):
        assert abs(ConeSystem(c).alpha * c - 2 * math.pi) < 1e-12
    with pytest.raises(ValueError):
        ConeSystem(1)


def test_canonical_triangle_point_on_clockwise_ray():
    # b on the included ray is the corner x itself, so every side has length 1
    tri = canonical_triangle(THETA6, (0, 0), (1, 0))
    assert tri.side_length == pytest.approx(1.0, abs=1e-15)
    assert tri.x == pytest.approx((1.0, 0.0), abs=1e-15)
    assert math.dist((0, 0), tri.z) == pytest.approx(1.0, abs=1e-15)


def test_canonical_triangle_on_bisector_height():
    d = 2.5
    b = (d * math.cos(math.pi / 6), d * math.sin(math.pi / 6))
    tri = canonical_triangle(THETA6, (0, 0), b)
    assert tri.height == pytest.approx(d, rel=1e-15)
    assert tri.side_length == pytest.approx(d / math.cos(math.pi / 6), rel=1e-15)


def test_canonical_triangle_equilateral_and_b_on_far_side():
    rng = np.random.default_rng(5)
    for a, b in rng.random((200, 2, 2)):
        tri = canonical_triangle(THETA6, a, b)
        (p0, p1, p2) = tri.vertices
        s = [math.dist(p0, p1), math.dist(p1, p2), math.dist(p2, p0)]
        assert max(s) - min(s) <= 1e-12 * max(s)
        # b on segment x z
        cross = (p2[0] - p1[0]) * (b[1] - p1[1]) - (p2[1] - p1[1]) * (b[0] - p1[0])
        assert abs(cross) <= 1e-12 * s[0] ** 2
        assert not strictly_inside(tri, b)
        assert not strictly_inside(tri, a)


def test_strictly_inside_open_region():
    tri = canonical_triangle(THETA6, (0, 0), (0.7, 0.2))
    assert strictly_inside(tri, tri.centroid)
    for v in tri.vertices:
        assert not strictly_inside(tri, v)
    assert not strictly_inside(tri, (0.7, 0.2))
    assert not strictly_inside(tri, (-0.1, 0.0))


def test_canonical_triangle_needs_six_cones():
    with pytest.raises(ValueError):
        canonical_triangle(ConeSystem(8), (0, 0), (1, 0))
    with pytest.raises(DegenerateDirectionError):
        canonical_triangle(THETA6, (1, 1), (1, 1))


def test_projection_on_bisector_and_on_ray():
    d = 3.0
    p = (d * math.cos(math.pi / 6), d * math.sin(math.pi / 6))
    assert bisector_projection_distance(6, (0, 0), p) == pytest.approx(d, rel=1e-15)
    assert bisector_projection_distance(6, (0, 0), (1, 0)) == pytest.approx(math.sqrt(3) / 2, rel=1e-15)


@given(coord, coord, st.integers(2, 48))
def test_projection_matches_angle_formula(dx, dy, c):
    assume(math.hypot(dx, dy) > 1e-6)
    got = bisector_projection_distance(c, (0, 0), (dx, dy))
    want = oracles.projection((0, 0), (dx, dy), c)
    r = math.hypot(dx, dy)
    assert got == pytest.approx(want, abs=1e-12 * r)
    assert got <= r * (1 + 1e-15)


def test_projection_order_can_disagree_with_distance_order():
    from instances import CROSSED_CHOICE, A, B, C
    pa, pb, pc = CROSSED_CHOICE[A], CROSSED_CHOICE[B], CROSSED_CHOICE[C]
    assert math.dist(pa, pc) < math.dist(pa, pb)
    assert bisector_projection_distance(6, pa, pb) < bisector_projection_distance(6, pa, pc)


def test_point_set_rejects_duplicates_and_non_finite():
    with pytest.raises(ValueError, match="0.*2|2.*0"):
        PointSet(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        PointSet(np.array([[0.0, math.nan]]))
    ps = PointSet.from_points([(0, 0), (1, 2)])
    assert ps[1].id == 1 and ps[1].x == 1.0 and ps[1].y == 2.0
    with pytest.raises(ValueError):
        ps.xy[0, 0] = 5.0


def test_rotate_full_turn_is_identity():
    ps = uniform(30, 3)
    assert np.allclose(rotate_frame(ps, 6).xy, ps.xy, atol=1e-12, rtol=0)


def test_rotation_shifts_cones():
    ps = uniform(40, 11)
    for c in (6, 12, 36):
        for sixths in (1, 2, 5):
            rot = rotate_frame(ps, sixths)
            for i in range(0, 40, 3):
                for j in range(1, 40, 7):
                    if i == j:
                        continue
                    want = (cone_index(c, ps.xy[i], ps.xy[j]) + sixths * c // 6) % c
                    assert cone_index(c, rot.xy[i], rot.xy[j]) == want


def test_rotation_keeps_theta6_and_yy36_edges():
    ps = uniform(50, 21)
    rot = rotate_frame(ps, 1)
    assert build_theta(ps, 6).edge_set == build_theta(rot, 6).edge_set
    assert build_yao_yao(ps, 36).edge_set == build_yao_yao(rot, 36).edge_set


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 5))
def test_rotation_keeps_theta6_edges_property(seed, sixths):
    ps = uniform(25, seed)
    assert build_theta(ps, 6).edge_set == build_theta(rotate_frame(ps, sixths), 6).edge_set
