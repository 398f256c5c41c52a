"""Time graph construction and all-pairs shortest paths under both kernel backends.

    python3 benchmarks/bench_backends.py [--sizes 100 200 400] [--repeat 3]

Each backend runs in its own interpreter because the choice is fixed at import.
"""
import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json, sys, time
from conegraph import kernels
from conegraph.gen import uniform
from conegraph.graphs import build_graph
from conegraph.metrics import shortest_paths

sizes, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
build_graph("yaoyao", uniform(20, 0), 36)   # warm-up (numba compiles here)
shortest_paths(build_graph("theta", uniform(20, 0), 6))
rows = []
for n in sizes:
    ps = uniform(n, 1)
    for kind, c in (("theta", 6), ("yao", 36), ("yaoyao", 36)):
        best_build = best_apsp = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            g = build_graph(kind, ps, c)
            t1 = time.perf_counter()
            shortest_paths(g)
            t2 = time.perf_counter()
            best_build, best_apsp = min(best_build, t1 - t0), min(best_apsp, t2 - t1)
        rows.append({"n": n, "graph": f"{kind}{c}", "build_s": best_build, "apsp_s": best_apsp})
json.dump({"backend": kernels.BACKEND, "rows": rows}, sys.stdout)
"""


def run(backend, sizes, repeat):
    env = dict(os.environ, CONEGRAPH_BACKEND=backend)
    env.pop("NUMBA_DISABLE_JIT", None)
    out = subprocess.run([sys.executable, "-c", _WORKER, json.dumps(sizes), str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run("numba", args.sizes, args.repeat), run("numpy", args.sizes, args.repeat)
    print(f"{'n':>5} {'graph':>9} {'numba build':>12} {'numpy build':>12} {'numba apsp':>11} {'numpy apsp':>11}")
    for a, b in zip(fast["rows"], slow["rows"]):
        print(f"{a['n']:>5} {a['graph']:>9} {a['build_s'] * 1e3:>10.2f}ms {b['build_s'] * 1e3:>10.2f}ms"
              f" {a['apsp_s'] * 1e3:>9.2f}ms {b['apsp_s'] * 1e3:>9.2f}ms")


if __name__ == "__main__":
    main()
