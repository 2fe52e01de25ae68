"""Tree representation and edge-list parsing.

Vertices are opaque strings; internally every vertex gets a dense index in
first-appearance order and all algorithms work on those indices. Trees are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CycleDetectedError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyInputError,
    MalformedLineError,
    SelfLoopError,
    UnknownVertexError,
)

Edge = tuple[str, str]


class Tree:
    """An immutable tree: connected, acyclic, simple, with string vertex ids.

    ``edges`` holds canonical pairs (lower dense index first) in construction
    order. Raises a :class:`~treemagic.errors.ParseError` subclass when the
    given vertices/edges do not form a tree.
    """

    __slots__ = ("vertices", "edges", "_index", "_adj", "_degree", "_edge_array")

    def __init__(self, vertices: Sequence[str], edges: Iterable[tuple[str, str]]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        if not self.vertices:
            raise EmptyInputError("no vertices")
        self._index: dict[str, int] = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            seen = set()
            dup = next(v for v in self.vertices if v in seen or seen.add(v))
            raise DuplicateEdgeError(f"vertex {dup!r} declared twice")

        n = len(self.vertices)
        canon: list[Edge] = []
        seen_edges: set[tuple[int, int]] = set()
        parent = list(range(n))  # union-find for cycle detection

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in edges:
            iu, iv = self._require(u), self._require(v)
            if iu == iv:
                raise SelfLoopError(f"self-loop at vertex {u!r}")
            if iu > iv:
                iu, iv, u, v = iv, iu, v, u
            if (iu, iv) in seen_edges:
                raise DuplicateEdgeError(f"duplicate edge {u!r} {v!r}")
            seen_edges.add((iu, iv))
            ru, rv = find(iu), find(iv)
            if ru == rv:
                raise CycleDetectedError(f"edge {u!r} {v!r} closes a cycle")
            parent[ru] = rv
            canon.append((u, v))

        self.edges: tuple[Edge, ...] = tuple(canon)
        if len(self.edges) != n - 1:
            root = find(0)
            stray = next(v for i, v in enumerate(self.vertices) if find(i) != root)
            raise DisconnectedError(f"vertex {stray!r} is not connected to {self.vertices[0]!r}")

        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            iu, iv = self._index[u], self._index[v]
            adj[iu].append(iv)
            adj[iv].append(iu)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)
        self._degree: tuple[int, ...] = tuple(len(a) for a in adj)
        self._edge_array = None  # built lazily

    def _require(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def index_of(self, v: str) -> int:
        return self._require(v)

    def neighbors(self, v: str) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in self._adj[self._require(v)])

    def neighbor_indices(self, i: int) -> tuple[int, ...]:
        return self._adj[i]

    def degree(self, v: str) -> int:
        return self._degree[self._require(v)]

    def edge_key(self, u: str, v: str) -> Edge:
        """Canonical form of an unordered pair: lower dense index first."""
        iu, iv = self._require(u), self._require(v)
        return (u, v) if iu < iv else (v, u)

    def has_edge(self, u: str, v: str) -> bool:
        iu, iv = self._require(u), self._require(v)
        return iv in self._adj[iu]

    def pendant_edges(self) -> tuple[Edge, ...]:
        """Edges incident to a degree-one vertex, in edge order."""
        out = []
        for u, v in self.edges:
            if self._degree[self._index[u]] == 1 or self._degree[self._index[v]] == 1:
                out.append((u, v))
        return tuple(out)

    def edge_index_array(self) -> np.ndarray:
        """Edges as an (E, 2) int64 array of dense endpoint indices."""
        if self._edge_array is None:
            arr = np.empty((len(self.edges), 2), dtype=np.int64)
            for e, (u, v) in enumerate(self.edges):
                arr[e, 0] = self._index[u]
                arr[e, 1] = self._index[v]
            self._edge_array = arr
        return self._edge_array

    def __repr__(self) -> str:
        return f"Tree({self.n_vertices} vertices, {self.n_edges} edges)"


def parse_tree(text: str) -> Tree:
    """Parse an edge-list document into a validated Tree.

    Format: UTF-8 text, one edge per line as two whitespace-separated vertex
    tokens. Lines starting with ``#`` and blank lines are ignored. A line with
    a single token declares an isolated vertex, which is only valid on its own
    (the one-vertex tree). Vertex order is first-appearance order.
    """
    vertices: list[str] = []
    index: dict[str, int] = {}
    first_line: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    seen_edges: set[tuple[int, int]] = set()
    parent: list[int] = []

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def intern(tok: str, line_no: int) -> int:
        if tok not in index:
            index[tok] = len(vertices)
            vertices.append(tok)
            parent.append(len(parent))
            first_line[tok] = line_no
        return index[tok]

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            intern(tokens[0], line_no)
            continue
        if len(tokens) != 2:
            raise MalformedLineError(
                f"expected one or two tokens, got {len(tokens)}", line_no, raw
            )
        u, v = tokens
        iu, iv = intern(u, line_no), intern(v, line_no)
        if iu == iv:
            raise SelfLoopError(f"self-loop at vertex {u!r}", line_no, raw)
        key = (iu, iv) if iu < iv else (iv, iu)
        if key in seen_edges:
            raise DuplicateEdgeError(f"duplicate edge {u!r} {v!r}", line_no, raw)
        seen_edges.add(key)
        ru, rv = find(iu), find(iv)
        if ru == rv:
            raise CycleDetectedError(f"edge {u!r} {v!r} closes a cycle", line_no, raw)
        parent[ru] = rv
        edges.append((u, v))

    if not vertices:
        raise EmptyInputError("input contains no vertices or edges")

    root = find(0)
    for i, v in enumerate(vertices):
        if find(i) != root:
            raise DisconnectedError(
                f"vertex {v!r} is not connected to {vertices[0]!r}", first_line[v]
            )

    return Tree(vertices, edges)


def path_between(tree: Tree, u: str, v: str) -> list[str]:
    """The unique path from u to v, inclusive, as a vertex list."""
    src, dst = tree.index_of(u), tree.index_of(v)
    if src == dst:
        return [u]
    prev: dict[int, int] = {src: src}
    queue = [src]
    while queue:
        nxt: list[int] = []
        for a in queue:
            for b in tree.neighbor_indices(a):
                if b not in prev:
                    prev[b] = a
                    if b == dst:
                        path = [b]
                        while path[-1] != src:
                            path.append(prev[path[-1]])
                        return [tree.vertices[i] for i in reversed(path)]
                    nxt.append(b)
        queue = nxt
    raise AssertionError("unreachable: tree is connected")


def format_edge_list(tree: Tree) -> str:
    """Render a tree in the edge-list format accepted by parse_tree."""
    if tree.n_edges == 0:
        return tree.vertices[0] + "\n"
    return "".join(f"{u} {v}\n" for u, v in tree.edges)
