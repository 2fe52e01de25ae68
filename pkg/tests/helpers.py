"""Shared builders, independent reference implementations, and strategies.

The references here deliberately avoid the production code paths: the forced
factors are recomputed with literal alternating-sum loops over branch counts,
and the brute-force reference materializes every labeling with itertools.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

import treemagic as tm


def path_tree(n: int) -> tm.Tree:
    names = [f"v{i}" for i in range(n)]
    return tm.Tree(names, [(names[i], names[i + 1]) for i in range(n - 1)])


def star_tree(leaves: int) -> tm.Tree:
    names = ["hub"] + [f"leaf{i}" for i in range(leaves)]
    return tm.Tree(names, [("hub", name) for name in names[1:]])


def double_star(a: int, b: int) -> tm.Tree:
    """Two adjacent hubs carrying a and b leaves."""
    names = ["p", "q"] + [f"pa{i}" for i in range(a)] + [f"qb{i}" for i in range(b)]
    edges = [("p", "q")]
    edges += [("p", f"pa{i}") for i in range(a)]
    edges += [("q", f"qb{i}") for i in range(b)]
    return tm.Tree(names, edges)


def seeded_random_trees(count: int, n_lo: int, n_hi: int, master_seed: int):
    """Deterministic batch of (seed, tree) pairs with sizes in [n_lo, n_hi]."""
    import numpy as np

    rng = np.random.default_rng(master_seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        seed = int(rng.integers(2**32))
        out.append((seed, tm.random_tree(n, seed)))
    return out


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return tm.tree_from_code((), n)
    code = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tm.tree_from_code(code, n)


@st.composite
def codes(draw, min_n: int = 3, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)))


def forced_reference(lt: tm.LayeredTree) -> dict:
    """Edge factors by literal transcription of the alternating branch sums."""
    k = lt.k
    vals = {}
    for u, v in lt.tree.edges:
        mu, mv = lt.layer[u], lt.layer[v]
        if mu == mv:
            total = sum(
                (-1) ** i * lt.branch_count(lt.center.c1, k - i + 1)
                for i in range(1, k + 2)
            )
            vals[(u, v)] = (-1) ** (k + 1) * total
        else:
            deep, m = (u, mu) if mu > mv else (v, mv)
            total = sum(
                (-1) ** i * lt.branch_count(deep, k - i + 1)
                for i in range(1, k - m + 2)
            )
            vals[(u, v)] = (-1) ** (k - m + 1) * total
    return vals


def sigma_reference(lt: tm.LayeredTree) -> int:
    """Center invariant via the reindexed per-layer form."""
    k = lt.k
    if not lt.center.is_odd:
        return -sum((-1) ** j * lt.layer_sizes.get(j, 0) for j in range(k + 1))
    c1, c2 = lt.center.c1, lt.center.c2
    return sum(
        (-1) ** (k - j + 1) * (lt.branch_count(c1, j) - lt.branch_count(c2, j))
        for j in range(1, k + 1)
    )


def bruteforce_reference(tree: tm.Tree, h: int) -> list[tuple[int, ...]]:
    """Every magic label vector in odometer order, via itertools.product."""
    out = []
    for combo in itertools.product(range(1, h), repeat=tree.n_edges):
        sums = {v: 0 for v in tree.vertices}
        for (u, v), lab in zip(tree.edges, combo):
            sums[u] += lab
            sums[v] += lab
        residues = {s % h for s in sums.values()}
        if len(residues) == 1:
            out.append(combo)
    return out


def spectrum_set(tree: tm.Tree, h_max: int) -> set[int]:
    """Members of the spectrum up to h_max via the closed form."""
    desc = tm.describe_spectrum(tree)
    return {h for h in range(2, h_max + 1) if desc.contains(h)}
