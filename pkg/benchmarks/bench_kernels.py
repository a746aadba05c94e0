"""Compiled vs interpreted kernel timings.

Each backend runs in its own subprocess because the backend is fixed at
import time.  Numba compilation is excluded: every kernel is warmed up on a
small level first.

    python benchmarks/bench_kernels.py --levels 10 14 18 --repeat 3
"""

import argparse
import json
import os
import subprocess
import sys
import timeit


def _worker(levels, repeat):
    import numpy as np

    from partgraph import _kernels, builtin_templates
    from partgraph.graph import build_graph
    from partgraph.partitions import count_table, partition_rows

    e1 = builtin_templates()["e1"]
    order, anchor = e1.search_plan
    mindeg = e1.adjacency.sum(axis=1).astype(np.int64)
    empty = np.zeros((0, e1.vertex_count), dtype=np.int64)

    def cases(n):
        rows, table = partition_rows(n), count_table(n)
        g = build_graph(n)
        verts = np.arange(g.vertex_count, dtype=np.int64)
        return {
            "build_adjacency": lambda: _kernels.build_adjacency(rows, n, table),
            "local_cliques": lambda: _kernels.local_cliques(g.indptr, g.indices, verts),
            "motif_search(e1)": lambda: _kernels.motif_search(
                g.indptr, g.indices, e1.adjacency, order, anchor, mindeg, -1, empty
            ),
        }

    for fn in cases(6).values():
        fn()
    out = {}
    for n in levels:
        for name, fn in cases(n).items():
            out[f"{name}@{n}"] = min(timeit.repeat(fn, number=1, repeat=repeat))
    json.dump(out, sys.stdout)


def _run(backend, levels, repeat):
    env = dict(os.environ, PARTGRAPH_BACKEND=backend)
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat), "--levels", *map(str, levels)]
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--levels", type=int, nargs="+", default=[10, 14, 18])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        _worker(args.levels, args.repeat)
        return

    fast = _run("numba", args.levels, args.repeat)
    slow = _run("python", args.levels, args.repeat)
    print(f"{'kernel@n':<26}{'numba (s)':>12}{'python (s)':>12}{'speedup':>10}")
    for key in fast:
        print(f"{key:<26}{fast[key]:>12.5f}{slow[key]:>12.5f}{slow[key] / max(fast[key], 1e-9):>9.1f}x")


if __name__ == "__main__":
    main()
