"""Hot inner loops for brute-force search and witness scanning.

Every kernel takes plain int64 scalars and numpy arrays so the same source
compiles under numba and runs unmodified as the pure-Python fallback
(see _jit). The *_py names are the uncompiled versions, kept importable for
benchmarks and cross-checks regardless of the TREEMAGIC_JIT setting.

Value ranges: labels are in 1..h-1 and vertex sums are bounded by
E * (h - 1), far inside int64 at any feasible search size.
"""

from __future__ import annotations

import numpy as np

from ._jit import JIT_ENABLED, njit


def _search_pruned_py(eu, ev, n_vertices, h, close_list, close_ptr, out, want_all):
    """Depth-first enumeration of edge labelings in odometer (lexicographic)
    order with prefix pruning.

    close_list/close_ptr: CSR schedule of vertices whose incident edges are
    all assigned once edge p is labeled; their sums are final there. A branch
    is cut as soon as two finalized vertices disagree mod h, which can never
    discard a completable magic labeling, so the first labeling found is the
    first in odometer order.

    Writes complete magic labelings into ``out`` rows (up to its capacity)
    and returns (number found, complete labelings examined).
    """
    n_edges = eu.shape[0]
    labels = np.zeros(n_edges, dtype=np.int64)
    sums = np.zeros(n_vertices, dtype=np.int64)
    ref_vertex = close_list[0]
    found = 0
    states = 0
    pos = 0
    while pos >= 0:
        cur = labels[pos]
        if cur != 0:
            sums[eu[pos]] -= cur
            sums[ev[pos]] -= cur
        cur += 1
        if cur > h - 1:
            labels[pos] = 0
            pos -= 1
            continue
        labels[pos] = cur
        sums[eu[pos]] += cur
        sums[ev[pos]] += cur
        if pos == n_edges - 1:
            states += 1
        ok = True
        ref = sums[ref_vertex] % h
        for idx in range(close_ptr[pos], close_ptr[pos + 1]):
            if sums[close_list[idx]] % h != ref:
                ok = False
                break
        if not ok:
            continue
        if pos == n_edges - 1:
            if found < out.shape[0]:
                out[found, :] = labels
            found += 1
            if not want_all:
                return found, states
            continue
        pos += 1
    return found, states


def _search_unpruned_py(eu, ev, n_vertices, h, out, want_all):
    """Plain odometer over all (h-1)^E labelings; reference for the pruned
    search. Examines every complete labeling, so the states count equals
    (h-1)^E whenever it exhausts the space."""
    n_edges = eu.shape[0]
    labels = np.zeros(n_edges, dtype=np.int64)
    sums = np.zeros(n_vertices, dtype=np.int64)
    found = 0
    states = 0
    pos = 0
    while pos >= 0:
        cur = labels[pos]
        if cur != 0:
            sums[eu[pos]] -= cur
            sums[ev[pos]] -= cur
        cur += 1
        if cur > h - 1:
            labels[pos] = 0
            pos -= 1
            continue
        labels[pos] = cur
        sums[eu[pos]] += cur
        sums[ev[pos]] += cur
        if pos < n_edges - 1:
            pos += 1
            continue
        states += 1
        ref = sums[0] % h
        magic = True
        for v in range(1, n_vertices):
            if sums[v] % h != ref:
                magic = False
                break
        if magic:
            if found < out.shape[0]:
                out[found, :] = labels
            found += 1
            if not want_all:
                return found, states
    return found, states


def _witness_scan_py(values, sigma, h):
    """Smallest x in 1..h-1 with x*f nonzero mod h on every edge and
    sigma*x zero mod h; 0 when none exists."""
    n_edges = values.shape[0]
    for x in range(1, h):
        if (sigma * x) % h != 0:
            continue
        ok = True
        for e in range(n_edges):
            if (x * values[e]) % h == 0:
                ok = False
                break
        if ok:
            return x
    return 0


def _witness_scan_all_py(values, sigma, h_max, out):
    """Fill out[h] with the smallest witness for each modulus 2..h_max (0 when
    none). One call per tree keeps the per-modulus cost off the Python side."""
    for h in range(2, h_max + 1):
        out[h] = _witness_scan_py(values, sigma, h)


if JIT_ENABLED:
    search_pruned = njit(cache=True)(_search_pruned_py)
    search_unpruned = njit(cache=True)(_search_unpruned_py)
    witness_scan = njit(cache=True)(_witness_scan_py)
    _witness_scan_jit = witness_scan

    @njit(cache=True)
    def witness_scan_all(values, sigma, h_max, out):
        for h in range(2, h_max + 1):
            out[h] = _witness_scan_jit(values, sigma, h)

else:
    search_pruned = _search_pruned_py
    search_unpruned = _search_unpruned_py
    witness_scan = _witness_scan_py
    witness_scan_all = _witness_scan_all_py
