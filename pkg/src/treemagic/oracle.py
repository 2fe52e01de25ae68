"""Ground-truth brute force: exhaustive labeling search and verification.

The searcher enumerates every edge labeling into {1, ..., h-1} in odometer
order (last edge varies fastest) and reports the first magic labeling found,
so results are deterministic. The default pruned search cuts branches whose
already-finalized vertex sums disagree; it provably returns the same verdict
and the same first witness as the plain odometer, which stays available as
``pruned=False`` for cross-checking.

The search space may also be partitioned by the first edge's label without
changing the verdict; the single-threaded kernels are fast enough here that
this module does not bother.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import LabelEdgeMismatchError, SearchBudgetExceededError
from .spectrum import MagicLabeling
from .tree import Tree

DEFAULT_CAP = 5_000_000

MAGIC = "magic"
NOT_MAGIC = "not_magic"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of a brute-force run.

    states_explored counts complete labelings examined; the pruned search
    skips labelings wholesale without examining them, so only the unpruned
    search visits exactly (h-1)^E states when it exhausts the space.
    """

    status: str
    witness: MagicLabeling | None
    states_explored: int
    reason: str | None = None

    @property
    def is_magic(self) -> bool:
        return self.status == MAGIC


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    constant: int | None
    diagnostic: str | None

    def __bool__(self) -> bool:
        return self.ok


def verify_labeling(tree: Tree, labeling: MagicLabeling) -> VerifyResult:
    """Check that a labeling is h-magic: every label in 1..h-1 and every
    vertex sum congruent to the same residue.

    Independent of how the labeling was produced. The diagnostic names the
    first violating edge or vertex; raises LabelEdgeMismatchError when the
    labeling does not cover exactly the tree's edges.
    """
    h = labeling.modulus
    keys = set(labeling.labels)
    tree_keys = set(tree.edges)
    if keys != tree_keys:
        missing = sorted(tree_keys - keys)
        extra = sorted(keys - tree_keys)
        raise LabelEdgeMismatchError(
            f"labeling does not match edge set (missing {missing}, extra {extra})"
        )
    for u, v in tree.edges:
        lab = labeling.labels[(u, v)]
        if not 1 <= lab <= h - 1:
            return VerifyResult(False, None, f"edge {u!r} {v!r} has label {lab}, not in 1..{h - 1}")
    sums = {v: 0 for v in tree.vertices}
    for (u, v), lab in labeling.labels.items():
        sums[u] += lab
        sums[v] += lab
    constant = sums[tree.vertices[0]] % h
    for v in tree.vertices:
        r = sums[v] % h
        if r != constant:
            return VerifyResult(
                False, None, f"vertex {v!r} has sum {r} (mod {h}), expected {constant}"
            )
    return VerifyResult(True, constant, None)


def _closure_schedule(tree: Tree) -> tuple[np.ndarray, np.ndarray]:
    """CSR arrays: vertices whose last incident edge is p, per edge position."""
    last = [-1] * tree.n_vertices
    arr = tree.edge_index_array()
    for p in range(arr.shape[0]):
        last[arr[p, 0]] = p
        last[arr[p, 1]] = p
    per_edge: list[list[int]] = [[] for _ in range(arr.shape[0])]
    for v, p in enumerate(last):
        per_edge[p].append(v)
    close_list = np.array([v for group in per_edge for v in group], dtype=np.int64)
    ptr = np.zeros(arr.shape[0] + 1, dtype=np.int64)
    for p, group in enumerate(per_edge):
        ptr[p + 1] = ptr[p] + len(group)
    return close_list, ptr


def _labeling_from_row(tree: Tree, h: int, row: np.ndarray) -> MagicLabeling:
    labels = {edge: int(row[e]) for e, edge in enumerate(tree.edges)}
    pendant = 0
    for u, v in tree.edges:
        if tree.degree(u) == 1 or tree.degree(v) == 1:
            pendant = labels[(u, v)]
            break
    return MagicLabeling(modulus=h, labels=labels, pendant_label=pendant)


def _run_search(tree: Tree, h: int, rows: int, want_all: bool, pruned: bool):
    arr = tree.edge_index_array()
    eu = np.ascontiguousarray(arr[:, 0])
    ev = np.ascontiguousarray(arr[:, 1])
    out = np.zeros((rows, arr.shape[0]), dtype=np.int64)
    if pruned:
        close_list, ptr = _closure_schedule(tree)
        found, states = _kernels.search_pruned(
            eu, ev, tree.n_vertices, h, close_list, ptr, out, want_all
        )
    else:
        found, states = _kernels.search_unpruned(eu, ev, tree.n_vertices, h, out, want_all)
    return int(found), int(states), out


def is_h_magic_bruteforce(
    tree: Tree, h: int, cap: int = DEFAULT_CAP, *, pruned: bool = True
) -> OracleVerdict:
    """Exhaustive verdict: Magic with the odometer-first witness, NotMagic,
    or Unknown when the space (h-1)^E exceeds the cap."""
    if h < 2:
        raise ValueError(f"modulus must be at least 2, got {h}")
    total = (h - 1) ** tree.n_edges
    if total > cap:
        return OracleVerdict(
            UNKNOWN, None, 0, reason=f"(h-1)^E = {total} exceeds cap {cap}"
        )
    if tree.n_edges == 0:
        # Single vertex: the empty labeling is the one state and it is magic
        # (all vertex sums are 0).
        empty = MagicLabeling(modulus=h, labels={}, pendant_label=0)
        return OracleVerdict(MAGIC, empty, 1)
    found, states, out = _run_search(tree, h, rows=1, want_all=False, pruned=pruned)
    if found:
        return OracleVerdict(MAGIC, _labeling_from_row(tree, h, out[0]), states)
    return OracleVerdict(NOT_MAGIC, None, states)


def enumerate_magic_labelings(
    tree: Tree, h: int, cap: int = DEFAULT_CAP, *, pruned: bool = True
) -> list[MagicLabeling]:
    """Every magic labeling, in odometer order.

    Raises SearchBudgetExceededError when (h-1)^E exceeds the cap.
    """
    if h < 2:
        raise ValueError(f"modulus must be at least 2, got {h}")
    total = (h - 1) ** tree.n_edges
    if total > cap:
        raise SearchBudgetExceededError(f"(h-1)^E = {total} exceeds cap {cap}")
    if tree.n_edges == 0:
        return [MagicLabeling(modulus=h, labels={}, pendant_label=0)]
    rows = 64
    while True:
        found, _, out = _run_search(tree, h, rows=rows, want_all=True, pruned=pruned)
        if found <= rows:
            return [_labeling_from_row(tree, h, out[i]) for i in range(found)]
        rows = found  # grow the buffer and rerun; search is deterministic
