#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Runs the local edge-cut kernel and the capped max-flow kernel on the same
inputs through both implementations and reports wall-clock times and
speedups.  Results are bit-identical by construction; this script also
asserts that.
"""

import argparse
import time

import numpy as np

from localcut import _kernel_py
from localcut.generators import pendant_instance, random_digraph
from localcut.kernel import KERNEL_IMPL
from localcut.rng import derive_seed

try:
    from localcut import _speedups
except ImportError:
    _speedups = None


def bench_local_ec(mod, graph, trials, seed, nu=64, k=4, gamma=0):
    cap = -(-128 * nu * k // (gamma + 1))
    thr = ((gamma + 1 << 64) + 8 * nu - 1) // (8 * nu)
    start = time.perf_counter()
    outs = []
    for t in range(trials):
        outs.append(mod.local_ec_run(
            graph.indptr, graph.heads, graph.n, 0, 0,
            t % graph.n, k + gamma, cap, thr, derive_seed(seed, t)))
    return time.perf_counter() - start, outs


def bench_maxflow(mod, graph, trials, cap=8):
    efrom = graph.tails.astype(np.int64)
    eto = graph.heads.astype(np.int64)
    ecap = np.ones(graph.m, dtype=np.int64)
    start = time.perf_counter()
    outs = []
    for t in range(trials):
        s = t % graph.n
        tt = (t * 7 + 3) % graph.n
        if s == tt:
            tt = (tt + 1) % graph.n
        outs.append(mod.max_flow_capped(graph.n, efrom, eto, ecap, s, tt, cap))
    return time.perf_counter() - start, outs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2000)
    parser.add_argument("--m", type=int, default=16000)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    print(f"active kernel: {KERNEL_IMPL}")
    if _speedups is None:
        print("compiled kernel unavailable; nothing to compare")
        return

    graphs = {
        "pendant(n=32)": pendant_instance(),
        f"random(n={args.n}, m={args.m})":
            random_digraph(args.n, args.m, args.seed),
    }
    for name, graph in graphs.items():
        t_py, out_py = bench_local_ec(_kernel_py, graph, args.trials,
                                      args.seed)
        t_cy, out_cy = bench_local_ec(_speedups, graph, args.trials,
                                      args.seed)
        assert [(o[0], o[1]) for o in out_py] == \
               [(o[0], o[1]) for o in out_cy], "kernel outputs diverged"
        print(f"local_ec  {name:26s} python {t_py:8.3f}s  "
              f"compiled {t_cy:8.3f}s  speedup {t_py / t_cy:6.1f}x")

        t_py, out_py = bench_maxflow(_kernel_py, graph, args.trials)
        t_cy, out_cy = bench_maxflow(_speedups, graph, args.trials)
        assert [o[0] for o in out_py] == [o[0] for o in out_cy], \
            "max-flow values diverged"
        print(f"max_flow  {name:26s} python {t_py:8.3f}s  "
              f"compiled {t_cy:8.3f}s  speedup {t_py / t_cy:6.1f}x")


if __name__ == "__main__":
    main()
