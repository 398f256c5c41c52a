import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conegraph.gen import circle_with_center, uniform
from conegraph.geometry import THETA6, PointSet, canonical_triangle, cone_index, strictly_inside
from conegraph.graphs import (
    GeometricDigraph,
    GraphKind,
    build_graph,
    build_half_theta6,
    build_theta,
    build_yao,
    build_yao_yao,
)
from conegraph.metrics import degree_stats

import oracles
from instances import CROSSED_CHOICE, A, B, C, D

ALL_KINDS = (GraphKind.THETA, GraphKind.YAO, GraphKind.YAOYAO)


def test_two_points():
    ps = PointSet.from_points([(0, 0), (1, 0.2)])
    for kind in ALL_KINDS:
        assert build_graph(kind, ps, 6).edge_set == {(0, 1), (1, 0)}
    half = build_half_theta6(ps)
    assert half.edge_set == {(0, 1)}


def test_single_point_has_no_edges():
    ps = PointSet.from_points([(0.3, 0.3)])
    for kind in ALL_KINDS:
        assert len(build_graph(kind, ps, 6)) == 0


def test_collinear_theta_picks_nearest_projection():
    ps = PointSet.from_points([(0, 0), (1, 0), (2, 0)])
    g = build_theta(ps, 6)
    assert (0, 1) in g and (0, 2) not in g
    assert g.edge_set == oracles.theta_edges(ps.xy.tolist(), 6)


def test_theta_and_yao_pick_different_neighbours():
    ps = PointSet.from_points(CROSSED_CHOICE)
    theta, yao, yy = build_theta(ps, 6), build_yao(ps, 6), build_yao_yao(ps, 6)
    assert (A, B) in theta and (A, C) not in theta
    assert (A, C) in yao and (A, B) not in yao
    assert yao.edge_set - yy.edge_set == {(B, A), (D, C)}
    assert (C, A) in yy and (A, C) in yy
    pts = ps.xy.tolist()
    assert theta.edge_set == oracles.theta_edges(pts, 6)
    assert yao.edge_set == oracles.yao_edges(pts, 6)
    assert yy.edge_set == oracles.yaoyao_edges(pts, 6)


def test_exact_yao_tie_goes_to_smaller_id():
    ps = PointSet.from_points([(0, 0), (0.6, 0.8), (0.8, 0.6)])
    assert ps.dist(0, 1) == ps.dist(0, 2)
    assert cone_index(6, ps.xy[0], ps.xy[1]) == cone_index(6, ps.xy[0], ps.xy[2])
    assert (0, 1) in build_yao(ps, 6) and (0, 2) not in build_yao(ps, 6)


def test_exact_theta_ties():
    # with two cones the bisector is vertical; all three candidates project to exactly 1.0
    ps = PointSet.from_points([(0, 0), (0.5, 1.0), (0.0, 1.0)])
    assert (0, 2) in build_theta(ps, 2)  # equal projection, shorter edge wins
    ps = PointSet.from_points([(0, 0), (0.5, 1.0), (-0.5, 1.0)])
    assert (0, 1) in build_theta(ps, 2)  # equal projection and length, smaller id wins


def test_circle_family():
    ps = circle_with_center(12)
    yao, yy = build_yao(ps, 6), build_yao_yao(ps, 6)
    assert degree_stats(yao).in_degree[0] == 12
    assert degree_stats(yy).in_degree[0] <= 6
    assert degree_stats(yy).total_degree[0] <= 12
    pts = ps.xy.tolist()
    assert yao.edge_set == oracles.yao_edges(pts, 6)
    assert yy.edge_set == oracles.yaoyao_edges(pts, 6)


def test_half_theta6_is_even_cone_subset():
    ps = uniform(80, 4)
    half, theta = build_half_theta6(ps), build_theta(ps, 6)
    assert half.edge_set <= theta.edge_set
    assert len(half) <= 3 * len(ps)
    for a, b in half.edges.tolist():
        assert cone_index(6, ps.xy[a], ps.xy[b]) % 2 == 0
    assert half.edge_set == oracles.half_theta6_edges(ps.xy.tolist())


@pytest.mark.parametrize("c", [2, 3, 4, 5, 6, 7, 9, 12, 36])
def test_constructors_match_oracle(c):
    for seed in range(15):
        ps = uniform(12, seed)
        pts = ps.xy.tolist()
        assert build_theta(ps, c).edge_set == oracles.theta_edges(pts, c)
        assert build_yao(ps, c).edge_set == oracles.yao_edges(pts, c)
        assert build_yao_yao(ps, c).edge_set == oracles.yaoyao_edges(pts, c)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**63), st.integers(2, 60), st.sampled_from([6, 7, 12, 36]))
def test_structure_properties(seed, n, c):
    ps = uniform(n, seed)
    theta, yao, yy = build_theta(ps, c), build_yao(ps, c), build_yao_yao(ps, c)
    assert yy.edge_set <= yao.edge_set
    for g in (theta, yao, yy):
        deg = degree_stats(g)
        assert deg.max_out <= c
        slots = {(a, cone_index(c, ps.xy[a], ps.xy[b])) for a, b in g.edges.tolist()}
        assert len(slots) == len(g)
    incoming = {(b, cone_index(c, ps.xy[b], ps.xy[a])) for a, b in yy.edges.tolist()}
    assert len(incoming) == len(yy)
    assert degree_stats(yy).max_total <= 2 * c


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**63), st.integers(2, 60))
def test_theta6_triangles_empty(seed, n):
    ps = uniform(n, seed)
    for a, b in build_theta(ps, 6).edges.tolist():
        tri = canonical_triangle(THETA6, ps[a], ps[b])
        assert not any(strictly_inside(tri, p) for p in ps.xy)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**63), st.integers(2, 40), st.sampled_from([6, 7, 12]))
def test_yao_edges_are_cone_nearest(seed, n, c):
    ps = uniform(n, seed)
    for a, b in build_yao(ps, c).edges.tolist():
        j = cone_index(c, ps.xy[a], ps.xy[b])
        for p in range(n):
            if p in (a, b) or cone_index(c, ps.xy[a], ps.xy[p]) != j:
                continue
            assert ps.dist(a, p) > ps.dist(a, b) or (ps.dist(a, p) == ps.dist(a, b) and p > b)


def test_determinism():
    ps = uniform(60, 9)
    for kind in ALL_KINDS:
        assert build_graph(kind, ps, 12) == build_graph(kind, ps, 12)


def test_digraph_validation():
    ps = PointSet.from_points([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        GeometricDigraph(GraphKind.YAO, 6, ps, np.array([[0, 0]]))
    with pytest.raises(ValueError):
        GeometricDigraph(GraphKind.YAO, 6, ps, np.array([[0, 2]]))
    g = GeometricDigraph("yao", 6, ps, np.array([[1, 0], [0, 1], [1, 0]]))
    assert g.edges.tolist() == [[0, 1], [1, 0]]
    assert GraphKind.parse("Half-Theta6") is GraphKind.HALF_THETA6
    with pytest.raises(ValueError):
        GraphKind.parse("delaunay")
    with pytest.raises(ValueError):
        build_graph("halftheta6", ps, 8)
