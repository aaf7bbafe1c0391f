"""Time the numeric kernels under both backends.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--graphs c60 q7 ...]

Each kernel is called once per backend before timing so numba compile time
is excluded; the best of ``--repeat`` runs is reported.
"""

import argparse
import time

import numpy as np

from theta_lab import _accel, fixtures, kernels
from theta_lab import generators as gen
from theta_lab.subdivision import subdivide


def _graphs(names):
    out = {}
    for name in names:
        if name.startswith("q") and name[1:].isdigit():
            out[name] = gen.hypercube_graph(int(name[1:]))
        elif name.startswith("s_"):
            out[name] = subdivide(fixtures.load(name[2:])[0])[0]
        else:
            out[name] = fixtures.load(name)[0]
    return out


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(g, repeat):
    a, b = g.edge_array[:, 0], g.edge_array[:, 1]
    rows = {}
    for name in _accel.BACKENDS:
        if name == "numba" and not _accel.HAS_NUMBA:
            continue
        _accel.set_backend(name)
        dist = kernels.apsp(g.n, g.indptr, g.indices)
        tm = kernels.theta_matrix(dist, a, b)
        left, right = np.nonzero(np.triu(tm, k=1))
        labels = kernels.closure_labels(g.m, left, right)
        rows[name] = {
            "apsp": _best(lambda: kernels.apsp(g.n, g.indptr, g.indices), repeat),
            "theta": _best(lambda: kernels.theta_matrix(dist, a, b), repeat),
            "closure": _best(lambda: kernels.closure_labels(g.m, left, right), repeat),
            "_check": (dist, tm, labels),
        }
    checks = [r.pop("_check") for r in rows.values()]
    for other in checks[1:]:
        assert all(np.array_equal(x, y) for x, y in zip(checks[0], other)), "backends disagree"
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--graphs", nargs="+", default=["c60", "s_c60", "q7", "q9"])
    args = ap.parse_args(argv)

    previous = _accel.backend()
    print(f"{'graph':>8} {'n':>5} {'m':>5}  {'kernel':<8} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    try:
        for name, g in _graphs(args.graphs).items():
            rows = bench(g, args.repeat)
            for kernel in ("apsp", "theta", "closure"):
                nb = rows.get("numba", {}).get(kernel)
                npy = rows["numpy"][kernel]
                nb_txt = f"{nb * 1e3:10.2f}" if nb is not None else f"{'-':>10}"
                speed = f"{npy / nb:7.1f}x" if nb else f"{'-':>8}"
                print(f"{name:>8} {g.n:>5} {g.m:>5}  {kernel:<8} {nb_txt} {npy * 1e3:10.2f} {speed}")
    finally:
        _accel.set_backend(previous)


if __name__ == "__main__":
    main()
