import json
import os
import subprocess
import sys

import numpy as np
import pytest

from conegraph import _kernels_numpy as knp
from conegraph._backend import HAVE_NUMBA
from conegraph.gen import circle_with_center, generate, uniform
from conegraph.geometry import ConeSystem
from conegraph.graphs import build_graph

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba backend not active")

SETS = [uniform(60, s) for s in range(10)] + [circle_with_center(12), generate("gaussian_clusters", 80, 3)]


def _bisectors(c):
    return ConeSystem(c).bisectors


@needs_numba
@pytest.mark.parametrize("c", [2, 6, 7, 36])
def test_kernels_agree(c):
    from conegraph import _kernels_numba as knb
    alpha = 2 * np.pi / c
    bc, bs = _bisectors(c)
    for ps in SETS:
        xy = ps.xy
        np.testing.assert_array_equal(knb.cone_matrix(xy, alpha, c), knp.cone_matrix(xy, alpha, c))
        np.testing.assert_array_equal(knb.theta_targets(xy, alpha, c, bc, bs),
                                      knp.theta_targets(xy, alpha, c, bc, bs))
        yao = knb.yao_targets(xy, alpha, c)
        np.testing.assert_array_equal(yao, knp.yao_targets(xy, alpha, c))
        np.testing.assert_array_equal(knb.yaoyao_filter(xy, alpha, c, yao),
                                      knp.yaoyao_filter(xy, alpha, c, yao))


@needs_numba
def test_all_pairs_agree():
    from conegraph import _kernels_numba as knb
    for ps in SETS[:5]:
        g = build_graph("yaoyao", ps, 12)
        indptr, indices, weights = g.undirected_csr()
        d1, p1 = knb.all_pairs(g.n, indptr, indices, weights)
        d2, p2 = knp.all_pairs(g.n, indptr, indices, weights)
        np.testing.assert_allclose(d1, d2, rtol=1e-12, atol=0)
        # predecessors may differ on equal-length paths; both must be consistent
        for d, p in ((d1, p1), (d2, p2)):
            for s in range(0, g.n, 7):
                for t in range(g.n):
                    if s != t:
                        u = p[s, t]
                        w = np.hypot(*(ps.xy[u] - ps.xy[t]))
                        assert d[s, u] + w == pytest.approx(d[s, t], rel=1e-12)


def test_all_pairs_disconnected():
    indptr = np.array([0, 1, 2, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int64)
    weights = np.array([2.0, 2.0])
    d, p = knp.all_pairs(3, indptr, indices, weights)
    assert d[0, 1] == 2.0 and np.isinf(d[0, 2]) and d[2, 2] == 0.0


_SCRIPT = """
import json, sys
from conegraph import kernels
from conegraph.gen import uniform
from conegraph.graphs import build_graph
from conegraph.metrics import stretch_report
out = {"backend": kernels.BACKEND, "graphs": {}}
for seed in range(4):
    ps = uniform(70, seed)
    for kind, c in (("theta", 6), ("yao", 7), ("yaoyao", 36), ("halftheta6", 6)):
        g = build_graph(kind, ps, c)
        out["graphs"][f"{kind}{c}:{seed}"] = [g.edges.tolist(), stretch_report(g).max_stretch]
json.dump(out, sys.stdout)
"""


def _run_backend(name):
    env = dict(os.environ, CONEGRAPH_BACKEND=name)
    env.pop("NUMBA_DISABLE_JIT", None)
    res = subprocess.run([sys.executable, "-c", _SCRIPT], env=env, capture_output=True, check=True)
    return json.loads(res.stdout)


@needs_numba
def test_env_flag_switches_backend_end_to_end():
    a, b = _run_backend("numba"), _run_backend("numpy")
    assert (a["backend"], b["backend"]) == ("numba", "numpy")
    assert a["graphs"].keys() == b["graphs"].keys()
    for key in a["graphs"]:
        ea, sa = a["graphs"][key]
        eb, sb = b["graphs"][key]
        assert ea == eb, key
        assert sa == pytest.approx(sb, rel=1e-12)


def test_bad_backend_name_rejected():
    env = dict(os.environ, CONEGRAPH_BACKEND="cuda")
    res = subprocess.run([sys.executable, "-c", "import conegraph"], env=env, capture_output=True)
    assert res.returncode != 0 and b"CONEGRAPH_BACKEND" in res.stderr
