#!/usr/bin/env python3
"""Benchmark the brute-force search kernels: compiled vs pure Python.

Runs the same workloads through the selected kernels (numba-compiled unless
TREEMAGIC_JIT=0) and through the uncompiled *_py fallbacks, then prints the
timings side by side. The pruned and unpruned searchers are timed separately.

Usage:
    python benchmarks/bench_oracle.py            # full workload
    python benchmarks/bench_oracle.py --quick    # smaller trees, faster
"""

import argparse
import time

import numpy as np

import treemagic as tm
from treemagic import _kernels
from treemagic._jit import JIT_ENABLED
from treemagic.oracle import _closure_schedule


def workloads(quick: bool):
    if quick:
        sizes = [(10, 4), (9, 5)]
    else:
        sizes = [(12, 5), (13, 4), (14, 3)]
    for n, h in sizes:
        yield f"path n={n}, h={h}", path(n), h
        yield f"random n={n}, h={h} (seed 7)", tm.random_tree(n, seed=7), h
    # a magic instance: witnesses exist and are collected
    hubs = 4 if quick else 6
    yield f"double star {hubs}+{hubs}, h=4 (magic)", double_star(hubs), 4


def path(n: int) -> tm.Tree:
    names = [f"v{i}" for i in range(n)]
    return tm.Tree(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def double_star(leaves: int) -> tm.Tree:
    names = ["p", "q"] + [f"x{i}" for i in range(leaves)] + [f"y{i}" for i in range(leaves)]
    edges = [("p", "q")]
    edges += [("p", f"x{i}") for i in range(leaves)]
    edges += [("q", f"y{i}") for i in range(leaves)]
    return tm.Tree(names, edges)


def time_search(kernel, tree, h, pruned: bool) -> tuple[float, int, int]:
    arr = tree.edge_index_array()
    eu = np.ascontiguousarray(arr[:, 0])
    ev = np.ascontiguousarray(arr[:, 1])
    out = np.zeros((4, tree.n_edges), dtype=np.int64)
    if pruned:
        close_list, ptr = _closure_schedule(tree)
        args = (eu, ev, tree.n_vertices, h, close_list, ptr, out, True)
    else:
        args = (eu, ev, tree.n_vertices, h, out, True)
    kernel(*args)  # warm-up: JIT compilation happens here, not in the timing
    t0 = time.perf_counter()
    found, states = kernel(*args)
    return time.perf_counter() - t0, int(found), int(states)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    mode = "numba njit" if JIT_ENABLED else "pure python (TREEMAGIC_JIT=0)"
    print(f"selected kernels: {mode}")
    print(f"{'workload':36} {'search':9} {'selected':>12} {'pure py':>12} {'speedup':>9}")

    for name, tree, h in workloads(args.quick):
        space = (h - 1) ** tree.n_edges
        for pruned, label in ((True, "pruned"), (False, "unpruned")):
            sel = _kernels.search_pruned if pruned else _kernels.search_unpruned
            py = _kernels._search_pruned_py if pruned else _kernels._search_unpruned_py
            t_sel, found, states = time_search(sel, tree, h, pruned)
            t_py, found_py, states_py = time_search(py, tree, h, pruned)
            assert found == found_py and states == states_py
            ratio = t_py / t_sel if t_sel > 0 else float("inf")
            print(
                f"{name:36} {label:9} {t_sel * 1e3:10.2f}ms {t_py * 1e3:10.2f}ms "
                f"{ratio:8.1f}x   ({found} magic, {states}/{space} examined)"
            )

    # witness scans are the other per-tree hot loop in large sweeps
    vec = np.asarray(tm.forced_labeling(tm.layered_tree(tm.random_tree(40, seed=3))).vector)
    out = np.zeros(2001, dtype=np.int64)
    _kernels.witness_scan_all(vec, 7, 2000, out)
    t0 = time.perf_counter()
    _kernels.witness_scan_all(vec, 7, 2000, out)
    t_sel = time.perf_counter() - t0
    t0 = time.perf_counter()
    _kernels._witness_scan_all_py(vec, 7, 2000, out)
    t_py = time.perf_counter() - t0
    ratio = t_py / t_sel if t_sel > 0 else float("inf")
    print(
        f"{'witness scan h<=2000, 39 edges':36} {'scan':9} "
        f"{t_sel * 1e3:10.2f}ms {t_py * 1e3:10.2f}ms {ratio:8.1f}x"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
