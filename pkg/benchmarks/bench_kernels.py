"""Benchmark the jitted kernels against their fallback implementations.

Runs each hot kernel on sized-up random inputs under both code paths and
prints a timing table. The jitted functions are warmed once so compilation
does not pollute the numbers.

    python3 benchmarks/bench_kernels.py [--repeats 5]

To benchmark a fully fallback-only process instead, set TREEPART_NO_NUMBA=1;
the table then compares the fallback against itself (useful as a baseline on
machines without a working numba).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from treepart import _accel
from treepart.grid import Partition, cross_edges, kirchhoff_tree_count, make_network
from treepart.grid import build_adjacency


def _random_net(rng, n, extra):
    fb = [int(rng.integers(v)) for v in range(1, n)]
    tb = list(range(1, n))
    for _ in range(extra):
        a, b = int(rng.integers(n)), int(rng.integers(n))
        if a != b:
            fb.append(a)
            tb.append(b)
    m = len(fb)
    p = rng.normal(0, 1, n)
    p -= p.mean()
    return make_network(np.arange(1, n + 1), p, fb, tb, np.ones(m), np.ones(m),
                        np.zeros(m, bool), np.arange(m), 0)


def timeit(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    rows = []

    # bridge detection on a large sparse graph
    net = _random_net(rng, 20000, 26000)
    indptr, adj_node, adj_edge = build_adjacency(net.n_buses, net.from_bus, net.to_bus)
    args_b = (net.n_buses, net.n_lines, indptr, adj_node, adj_edge)
    _accel.bridge_mask(*args_b)  # warm the jit
    rows.append((
        "bridge_mask (n=20k, m=46k)",
        timeit(lambda: _accel.bridge_mask(*args_b), args.repeats),
        timeit(lambda: _accel._bridge_mask_impl(*args_b), args.repeats),
    ))

    # component labelling with half the lines out
    alive = rng.random(net.n_lines) < 0.5
    args_c = (net.n_buses, indptr, adj_node, adj_edge, alive)
    _accel.component_labels(*args_c)
    rows.append((
        "component_labels (n=20k)",
        timeit(lambda: _accel.component_labels(*args_c), args.repeats),
        timeit(lambda: _accel._component_labels_numpy(*args_c), args.repeats),
    ))

    # k-means inner loop on a spectral-sized embedding
    pts = rng.normal(size=(4000, 8))
    init = pts[rng.choice(4000, 8, replace=False)]
    _accel.lloyd(pts.copy(), init.copy(), 100, 1e-12)
    rows.append((
        "lloyd k-means (4000x8, k=8)",
        timeit(lambda: _accel.lloyd(pts.copy(), init.copy(), 100, 1e-12), args.repeats),
        timeit(lambda: _accel._lloyd_numpy(pts.copy(), init.copy(), 100, 1e-12), args.repeats),
    ))

    # spanning tree enumeration on a dense small multigraph
    dense = _random_net(rng, 9, 16)
    red = cross_edges(dense, Partition(np.arange(9), 9))
    order = np.argsort(red.line_ids)
    eu = red.endpoints[order, 0].astype(np.int64)
    ev = red.endpoints[order, 1].astype(np.int64)
    count = kirchhoff_tree_count(red)
    out = np.empty((count, 8), np.int64)
    _accel.spanning_trees_table(9, eu, ev, out)

    def via_python():
        from treepart.grid import enumerate_spanning_trees
        import treepart.grid as g

        saved = _accel.NUMBA_ENABLED
        _accel.NUMBA_ENABLED = False
        try:
            n = sum(1 for _ in enumerate_spanning_trees(red))
        finally:
            _accel.NUMBA_ENABLED = saved
        assert n == count

    rows.append((
        f"spanning trees ({count} trees)",
        timeit(lambda: _accel.spanning_trees_table(9, eu, ev, out), args.repeats),
        timeit(via_python, args.repeats),
    ))

    print(f"active backend: {_accel.backend()}")
    print(f"{'kernel':<34} {'jitted source':>13} {'fallback':>13} {'speedup':>8}")
    for name, fast, slow in rows:
        print(f"{name:<34} {fast * 1e3:>11.2f}ms {slow * 1e3:>11.2f}ms {slow / fast:>7.1f}x")


if __name__ == "__main__":
    main()
