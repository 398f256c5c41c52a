"""Vectorised numpy fallbacks for the kernels in ``_kernels_numba``."""
import math

import numpy as np

TWO_PI = 2.0 * math.pi


def _cones(dx, dy, alpha, c):
    theta = np.arctan2(dy, dx)
    theta = np.where(theta < 0.0, theta + TWO_PI, theta)
    j = np.floor(theta / alpha).astype(np.int64)
    return np.minimum(j, c - 1)


def _deltas(xy):
    dx = xy[None, :, 0] - xy[:, None, 0]
    dy = xy[None, :, 1] - xy[:, None, 1]
    return dx, dy


def cone_matrix(xy, alpha, c):
    dx, dy = _deltas(xy)
    out = _cones(dx, dy, alpha, c)
    np.fill_diagonal(out, -1)
    return out


def _select(cones, keys, c):
    """Per row and cone, the column minimising ``keys`` lexicographically, then by index."""
    n = cones.shape[0]
    out = np.full((n, c), -1, np.int64)
    for j in range(c):
        cand = cones == j
        for key in keys:
            masked = np.where(cand, key, np.inf)
            cand &= masked == masked.min(axis=1, keepdims=True)
        has = cand.any(axis=1)
        out[has, j] = np.argmax(cand[has], axis=1)
    return out


def theta_targets(xy, alpha, c, bis_cos, bis_sin):
    dx, dy = _deltas(xy)
    cones = cone_matrix(xy, alpha, c)
    safe = np.maximum(cones, 0)
    proj = dx * bis_cos[safe] + dy * bis_sin[safe]
    dist = np.sqrt(dx * dx + dy * dy)
    return _select(cones, (proj, dist), c)


def yao_targets(xy, alpha, c):
    dx, dy = _deltas(xy)
    cones = cone_matrix(xy, alpha, c)
    return _select(cones, (np.sqrt(dx * dx + dy * dy),), c)


def yaoyao_filter(xy, alpha, c, yao):
    n = xy.shape[0]
    src, slot = np.nonzero(yao >= 0)
    dst = yao[src, slot]
    dx = xy[src, 0] - xy[dst, 0]
    dy = xy[src, 1] - xy[dst, 1]
    at_target = _cones(dx, dy, alpha, c)
    d = np.sqrt(dx * dx + dy * dy)
    group = dst * c + at_target
    order = np.lexsort((src, d, group))
    first = order[np.unique(group[order], return_index=True)[1]]
    incoming = np.full((n, c), -1, np.int64)
    incoming[dst[first], at_target[first]] = src[first]
    out = yao.copy()
    dropped = incoming[dst, at_target] != src
    out[src[dropped], slot[dropped]] = -1
    return out, incoming


def all_pairs(n, indptr, indices, weights):
    # Floyd-Warshall; pred[i, j] is the node before j on the path from i.
    dist = np.full((n, n), np.inf)
    pred = np.full((n, n), -1, np.int64)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    dist[rows, indices] = weights
    pred[rows, indices] = rows
    np.fill_diagonal(dist, 0.0)
    np.fill_diagonal(pred, -1)
    for k in range(n):
        via = dist[:, k, None] + dist[None, k, :]
        better = via < dist
        dist = np.where(better, via, dist)
        pred = np.where(better, pred[k][None, :], pred)
    return dist, pred
