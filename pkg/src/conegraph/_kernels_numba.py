"""numba kernels.  Arithmetic mirrors ``_kernels_numpy`` expression for expression."""
import heapq
import math

import numpy as np
from numba import njit, prange

TWO_PI = 2.0 * math.pi


@njit(cache=True, inline="always")
def _cone(dx, dy, alpha, c):
    theta = math.atan2(dy, dx)
    if theta < 0.0:
        theta += TWO_PI
    j = int(math.floor(theta / alpha))
    if j >= c:
        j = c - 1
    return j


@njit(cache=True)
def cone_matrix(xy, alpha, c):
    n = xy.shape[0]
    out = np.full((n, n), -1, np.int64)
    for a in range(n):
        for p in range(n):
            if p != a:
                out[a, p] = _cone(xy[p, 0] - xy[a, 0], xy[p, 1] - xy[a, 1], alpha, c)
    return out


@njit(cache=True, parallel=True)
def theta_targets(xy, alpha, c, bis_cos, bis_sin):
    n = xy.shape[0]
    out = np.full((n, c), -1, np.int64)
    for a in prange(n):
        best_proj = np.empty(c)
        best_dist = np.empty(c)
        for p in range(n):
            if p == a:
                continue
            dx = xy[p, 0] - xy[a, 0]
            dy = xy[p, 1] - xy[a, 1]
            j = _cone(dx, dy, alpha, c)
            proj = dx * bis_cos[j] + dy * bis_sin[j]
            d = math.sqrt(dx * dx + dy * dy)
            if (out[a, j] < 0 or proj < best_proj[j]
                    or (proj == best_proj[j] and d < best_dist[j])):
                out[a, j] = p
                best_proj[j] = proj
                best_dist[j] = d
    return out


@njit(cache=True, parallel=True)
def yao_targets(xy, alpha, c):
    n = xy.shape[0]
    out = np.full((n, c), -1, np.int64)
    for a in prange(n):
        best_dist = np.empty(c)
        for p in range(n):
            if p == a:
                continue
            dx = xy[p, 0] - xy[a, 0]
            dy = xy[p, 1] - xy[a, 1]
            j = _cone(dx, dy, alpha, c)
            d = math.sqrt(dx * dx + dy * dy)
            if out[a, j] < 0 or d < best_dist[j]:
                out[a, j] = p
                best_dist[j] = d
    return out


@njit(cache=True)
def yaoyao_filter(xy, alpha, c, yao):
    """Return (filtered targets, kept incoming source per (node, cone))."""
    n = xy.shape[0]
    incoming = np.full((n, c), -1, np.int64)
    inc_dist = np.empty((n, c))
    at_target = np.full((n, c), -1, np.int64)
    for u in range(n):
        for j in range(c):
            v = yao[u, j]
            if v < 0:
                continue
            dx = xy[u, 0] - xy[v, 0]
            dy = xy[u, 1] - xy[v, 1]
            jj = _cone(dx, dy, alpha, c)
            at_target[u, j] = jj
            d = math.sqrt(dx * dx + dy * dy)
            q = incoming[v, jj]
            if q < 0 or d < inc_dist[v, jj] or (d == inc_dist[v, jj] and u < q):
                incoming[v, jj] = u
                inc_dist[v, jj] = d
    out = yao.copy()
    for u in range(n):
        for j in range(c):
            v = yao[u, j]
            if v >= 0 and incoming[v, at_target[u, j]] != u:
                out[u, j] = -1
    return out, incoming


@njit(cache=True)
def _dijkstra(s, indptr, indices, weights, dist, pred):
    n = dist.shape[0]
    done = np.zeros(n, np.bool_)
    dist[s] = 0.0
    heap = [(0.0, np.int64(s))]
    while len(heap) > 0:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            nd = d + weights[e]
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))


@njit(cache=True, parallel=True)
def all_pairs(n, indptr, indices, weights):
    dist = np.full((n, n), np.inf)
    pred = np.full((n, n), -1, np.int64)
    for s in prange(n):
        _dijkstra(s, indptr, indices, weights, dist[s], pred[s])
    return dist, pred
