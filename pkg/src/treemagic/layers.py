"""Center, diameter, layer decomposition, and branch layer counts.

The layer of a vertex is its distance to the center (for an odd diameter,
the minimum of its distances to the two center vertices). The branch of a
vertex u is the subtree hanging off u away from the center; branch_count(u, d)
is the number of layer-d vertices in that subtree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalError
from .tree import Tree


@dataclass(frozen=True)
class Center:
    """Center vertex or adjacent vertex pair, with exact diameter.

    ``vertices`` has one element when the diameter is even and two when odd;
    for a pair, the first element is the one whose identifier sorts first.
    ``k`` is diameter // 2.
    """

    vertices: tuple[str, ...]
    diameter: int
    k: int

    def __post_init__(self):
        if len(self.vertices) != 1 + self.diameter % 2:
            raise InternalError("center size does not match diameter parity")
        if self.k != self.diameter // 2:
            raise InternalError("k must equal diameter // 2")

    @property
    def is_odd(self) -> bool:
        return self.diameter % 2 == 1

    @property
    def c(self) -> str:
        return self.vertices[0]

    @property
    def c1(self) -> str:
        return self.vertices[0]

    @property
    def c2(self) -> str:
        return self.vertices[1]


def _center_from_pair(tree: Tree, a: str, b: str, diameter: int) -> Center:
    c1, c2 = sorted((a, b))
    if not tree.has_edge(c1, c2):
        raise InternalError(f"center pair {c1!r}, {c2!r} is not an edge")
    return Center((c1, c2), diameter, diameter // 2)


def diameter_and_center(tree: Tree) -> Center:
    """Exact diameter and center by iterative leaf peeling.

    Removes all current leaves round by round until one or two vertices
    remain; r rounds leave a single center (diameter 2r) or an adjacent
    center pair (diameter 2r + 1).
    """
    n = tree.n_vertices
    degree = [tree.degree(v) for v in tree.vertices]
    alive = n
    removed = [False] * n
    leaves = [i for i in range(n) if degree[i] <= 1]
    rounds = 0
    while alive > 2:
        rounds += 1
        nxt: list[int] = []
        for i in leaves:
            removed[i] = True
            alive -= 1
            for j in tree.neighbor_indices(i):
                if not removed[j]:
                    degree[j] -= 1
                    if degree[j] == 1:
                        nxt.append(j)
        leaves = nxt
    rest = [tree.vertices[i] for i in range(n) if not removed[i]]
    if len(rest) == 1:
        return Center((rest[0],), 2 * rounds, rounds)
    return _center_from_pair(tree, rest[0], rest[1], 2 * rounds + 1)


def _bfs_dists(tree: Tree, start: int) -> list[int]:
    dist = [-1] * tree.n_vertices
    dist[start] = 0
    queue = [start]
    while queue:
        nxt: list[int] = []
        for a in queue:
            for b in tree.neighbor_indices(a):
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    nxt.append(b)
        queue = nxt
    return dist


def diameter_and_center_double_bfs(tree: Tree) -> Center:
    """Diameter and center via two breadth-first sweeps.

    Independent of :func:`diameter_and_center`; the two must agree on every
    tree. BFS from any vertex reaches one end u of a longest path; BFS from u
    reaches the other end, and the center is the middle of that path.
    """
    d0 = _bfs_dists(tree, 0)
    u = max(range(tree.n_vertices), key=lambda i: (d0[i], -i))
    dist = [-1] * tree.n_vertices
    prev = [-1] * tree.n_vertices
    dist[u] = 0
    queue = [u]
    while queue:
        nxt: list[int] = []
        for a in queue:
            for b in tree.neighbor_indices(a):
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    prev[b] = a
                    nxt.append(b)
        queue = nxt
    w = max(range(tree.n_vertices), key=lambda i: (dist[i], -i))
    diameter = dist[w]
    path = [w]
    while path[-1] != u:
        path.append(prev[path[-1]])
    if diameter % 2 == 0:
        mid = tree.vertices[path[diameter // 2]]
        return Center((mid,), diameter, diameter // 2)
    a = tree.vertices[path[diameter // 2]]
    b = tree.vertices[path[diameter // 2 + 1]]
    return _center_from_pair(tree, a, b, diameter)


class LayeredTree:
    """A tree annotated with its center, layers, and branch layer counts.

    Immutable after construction. ``counts`` is an (n_vertices, k + 1) int64
    matrix with counts[u, d] = number of layer-d vertices in the branch of u;
    rows of center vertices count the whole tree (or, for an odd diameter,
    their own side of it).
    """

    __slots__ = (
        "tree", "center", "k", "layer", "layer_sizes", "layer_members",
        "parent", "children", "side_of_center", "counts",
    )

    def __init__(self, tree: Tree, center: Center):
        for c in center.vertices:
            tree.index_of(c)  # raises UnknownVertexError if foreign
        if center != diameter_and_center(tree):
            raise InternalError("center was not produced from this tree")
        self.tree = tree
        self.center = center
        self.k = center.k
        n = tree.n_vertices

        layer_idx = [-1] * n
        parent_idx = [-1] * n
        root_of = [-1] * n
        roots = [tree.index_of(c) for c in center.vertices]
        for r in roots:
            layer_idx[r] = 0
            root_of[r] = r
        queue = list(roots)
        depth = 0
        while queue:
            depth += 1
            nxt: list[int] = []
            for a in queue:
                for b in tree.neighbor_indices(a):
                    if layer_idx[b] < 0:
                        layer_idx[b] = depth
                        parent_idx[b] = a
                        root_of[b] = root_of[a]
                        nxt.append(b)
            queue = nxt

        self.layer: dict[str, int] = {v: layer_idx[i] for i, v in enumerate(tree.vertices)}
        sizes: dict[int, int] = {}
        members: dict[int, list[str]] = {}
        for i, v in enumerate(tree.vertices):
            d = layer_idx[i]
            sizes[d] = sizes.get(d, 0) + 1
            members.setdefault(d, []).append(v)
        self.layer_sizes: dict[int, int] = sizes
        self.layer_members: dict[int, tuple[str, ...]] = {
            d: tuple(vs) for d, vs in members.items()
        }
        self.parent: dict[str, str | None] = {
            v: (tree.vertices[parent_idx[i]] if parent_idx[i] >= 0 else None)
            for i, v in enumerate(tree.vertices)
        }
        kids: list[list[str]] = [[] for _ in range(n)]
        for i, v in enumerate(tree.vertices):
            if parent_idx[i] >= 0:
                kids[parent_idx[i]].append(v)
        self.children: dict[str, tuple[str, ...]] = {
            v: tuple(kids[i]) for i, v in enumerate(tree.vertices)
        }
        if center.is_odd:
            self.side_of_center: dict[str, str] = {
                v: tree.vertices[root_of[i]] for i, v in enumerate(tree.vertices)
            }
        else:
            self.side_of_center = {}

        counts = np.zeros((n, self.k + 1), dtype=np.int64)
        order = sorted(range(n), key=lambda i: layer_idx[i], reverse=True)
        for i in order:
            counts[i, layer_idx[i]] = 1
            if parent_idx[i] >= 0:
                counts[parent_idx[i]] += counts[i]
        self.counts = counts
        self.counts.setflags(write=False)

    def branch_count(self, u: str, d: int) -> int:
        """|layer-d vertices in the branch of u|; zero outside [layer(u), k]."""
        if d < 0 or d > self.k:
            return 0
        return int(self.counts[self.tree.index_of(u), d])

    def branch_layer_vertices(self, u: str, p: int) -> tuple[str, ...]:
        """The layer-p vertices in the branch of u, in vertex order."""
        self.tree.index_of(u)  # UnknownVertexError for foreign vertices
        m = self.layer[u]
        if p < m or p > self.k:
            return ()
        if p == m:
            return (u,)
        out = []
        for w in self.layer_members.get(p, ()):
            a = w
            for _ in range(p - m):
                a = self.parent[a]
            if a == u:
                out.append(w)
        return tuple(out)


def layer_decomposition(tree: Tree, center: Center) -> LayeredTree:
    """Annotate a tree with layers and branch counts for the given center."""
    return LayeredTree(tree, center)


def layered_tree(tree: Tree) -> LayeredTree:
    """Shorthand: find the center, then decompose."""
    return LayeredTree(tree, diameter_and_center(tree))


def check_partition_identity(lt: LayeredTree, u: str, p: int, d: int) -> bool:
    """Test probe: branch counts of the layer-p vertices in u's branch sum to u's.

    Requires p > layer(u) and d > p. Returns whether
    sum over w in branch-layer(u, p) of branch_count(w, d) equals
    branch_count(u, d). Always true on a correct implementation; exposed so
    test suites can exercise the identity directly.
    """
    lt.tree.index_of(u)  # UnknownVertexError for foreign vertices
    m = lt.layer[u]
    if p <= m:
        raise ValueError(f"p must exceed layer(u) = {m}, got {p}")
    if d <= p:
        raise ValueError(f"d must exceed p = {p}, got {d}")
    total = sum(lt.branch_count(w, d) for w in lt.branch_layer_vertices(u, p))
    return total == lt.branch_count(u, d)


def partition_identity_violations(lt: LayeredTree) -> list[tuple[str, int, int]]:
    """All (u, p, d) with p > layer(u), d > p where the partition identity fails.

    Vectorized sweep over every admissible triple; empty on a correct
    implementation.
    """
    tree = lt.tree
    k = lt.k
    counts = lt.counts
    violations: list[tuple[str, int, int]] = []

    # Bucket layer-p vertices under each strict ancestor via one pass over
    # root paths; bucket[(u_idx, p)] lists members of u's branch in layer p.
    buckets: dict[tuple[int, int], list[int]] = {}
    for v in tree.vertices:
        p = lt.layer[v]
        vi = tree.index_of(v)
        a = lt.parent[v]
        while a is not None:
            buckets.setdefault((tree.index_of(a), p), []).append(vi)
            a = lt.parent[a]

    for (ui, p), members in buckets.items():
        if p + 1 > k:
            continue  # all deeper layers empty; identity is trivially 0 = 0
        lhs = counts[members, p + 1 :].sum(axis=0)
        rhs = counts[ui, p + 1 :]
        bad = np.nonzero(lhs != rhs)[0]
        for off in bad:
            violations.append((tree.vertices[ui], p, p + 1 + int(off)))

    # Empty buckets: if u's branch has nothing in layer p, deeper layers must
    # be empty too, making the identity 0 = 0; verify that emptiness.
    for v in tree.vertices:
        vi = tree.index_of(v)
        m = lt.layer[v]
        for p in range(m + 1, k):
            if counts[vi, p] == 0 and counts[vi, p + 1 :].any():
                d = p + 1 + int(np.nonzero(counts[vi, p + 1 :])[0][0])
                violations.append((v, p, d))
                break
    return violations
