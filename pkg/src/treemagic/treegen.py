"""Deterministic tree generation: seeded random trees and exhaustive sweeps.

Uses the standard bijection between labeled trees on n vertices and length
(n-2) code sequences over the vertex indices, so uniform random codes give
uniform random labeled trees and lexicographic code order enumerates all
n^(n-2) of them. Vertices are named "0".."n-1".
"""

from __future__ import annotations

import heapq
import itertools
from typing import Iterator, Sequence

import numpy as np

from .errors import NTooLargeError
from .tree import Tree

MAX_EXHAUSTIVE_N = 8


def tree_from_code(code: Sequence[int], n: int | None = None) -> Tree:
    """Decode a code sequence (n-2 vertex indices) into a labeled tree."""
    if n is None:
        n = len(code) + 2
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        if code:
            raise ValueError("a single vertex takes an empty code")
        return Tree(["0"], [])
    if len(code) != n - 2:
        raise ValueError(f"code for n = {n} must have length {n - 2}, got {len(code)}")
    if any(not 0 <= a < n for a in code):
        raise ValueError("code entries must be vertex indices in [0, n)")

    degree = [1] * n
    for a in code:
        degree[a] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges: list[tuple[str, str]] = []
    for a in code:
        leaf = heapq.heappop(leaves)
        edges.append((str(leaf), str(a)))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((str(u), str(v)))
    return Tree([str(i) for i in range(n)], edges)


def code_from_tree(tree: Tree) -> tuple[int, ...]:
    """Encode a tree back into its code over dense vertex indices.

    Inverse of tree_from_code for trees whose vertices are "0".."n-1"; works
    on any tree by using first-appearance indices.
    """
    n = tree.n_vertices
    if n <= 2:
        return ()
    adj = [set(tree.neighbor_indices(i)) for i in range(n)]
    leaves = [i for i in range(n) if len(adj[i]) == 1]
    heapq.heapify(leaves)
    code: list[int] = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        nb = next(iter(adj[leaf]))
        code.append(nb)
        adj[nb].discard(leaf)
        adj[leaf].clear()
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return tuple(code)


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree on n vertices, deterministic per seed."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n <= 2:
        return tree_from_code((), n)
    rng = np.random.default_rng(seed)
    code = rng.integers(0, n, size=n - 2)
    return tree_from_code([int(a) for a in code], n)


def all_labeled_trees(n: int) -> Iterator[Tree]:
    """All labeled trees on n vertices, one per code, in lexicographic code order.

    Yields exactly n^(n-2) trees for n >= 2 and the single vertex for n = 1.
    Guarded at n <= 8 (1e6+ trees beyond that).
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > MAX_EXHAUSTIVE_N:
        raise NTooLargeError(f"exhaustive enumeration capped at n = {MAX_EXHAUSTIVE_N}, got {n}")
    if n == 1:
        yield tree_from_code((), 1)
        return
    for code in itertools.product(range(n), repeat=n - 2):
        yield tree_from_code(code, n)
