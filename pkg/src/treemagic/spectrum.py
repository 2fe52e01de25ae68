"""Closed-form integer-magic spectra, forced labelings, and witnesses.

In any magic labeling of a tree, every edge's residue is the pendant label x
times a fixed integer f(e) computed from branch layer counts, and x times the
center invariant sigma must vanish mod h. Those two facts pin the whole
spectrum down to one of three closed forms, and conversely any pendant label
x that keeps every x*f(e) nonzero mod h while killing sigma*x yields an
explicit magic labeling l(e) = x*f(e).

All functions here are pure over immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import DegenerateTreeError, InternalError, NotInSpectrumError
from .layers import LayeredTree, layered_tree
from .tree import Edge, Tree

EMPTY = "empty"
CO_DIVISORS = "co_divisors"
UNION_OF_MULTIPLES = "union_of_multiples"
TRIVIALLY_MAGIC = "trivially_magic"


@dataclass(frozen=True)
class ForcedLabeling:
    """The integer factor f(e) every magic labeling applies to the pendant label.

    values maps each canonical edge to its exact integer factor; range_f is
    the set of distinct factors; edge_layer maps each edge to the layer of its
    deeper endpoint (the center pair's edge maps to 0); vector holds the
    factors in tree edge order for the kernels.
    """

    values: dict[Edge, int]
    range_f: frozenset[int]
    edge_layer: dict[Edge, int]
    vector: np.ndarray


@dataclass(frozen=True)
class MagicLabeling:
    """An edge labeling into nonzero residues mod h with constant vertex sums."""

    modulus: int
    labels: dict[Edge, int]
    pendant_label: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")


def _alternating_weights(k: int) -> np.ndarray:
    # weight of layer j in the branch sums: (-1)^(k - j + 1)
    w = np.empty(k + 1, dtype=np.int64)
    for j in range(k + 1):
        w[j] = -1 if (k - j) % 2 == 0 else 1
    return w


def forced_labeling(lt: LayeredTree) -> ForcedLabeling:
    """Compute the forced factor of every edge from branch layer counts.

    For the edge from a vertex u at layer m to its parent, the factor is the
    alternating sum of u's branch layer counts from layer k down to m, with
    an overall sign making pendant edges come out as exactly 1. For an odd
    diameter the center edge takes the same alternating sum over the first
    center vertex's whole side, down to layer 0.
    """
    tree = lt.tree
    if tree.n_edges == 0:
        raise DegenerateTreeError("single-vertex tree has no edges to label")
    k = lt.k
    weights = _alternating_weights(k)
    dots = lt.counts @ weights  # per-vertex alternating branch sums

    values: dict[Edge, int] = {}
    edge_layer: dict[Edge, int] = {}
    vector = np.empty(tree.n_edges, dtype=np.int64)
    for e, (u, v) in enumerate(tree.edges):
        mu, mv = lt.layer[u], lt.layer[v]
        if mu == mv:
            # only the center pair's edge joins two layer-0 vertices
            deeper = lt.center.c1
            m = 0
        else:
            deeper, m = (u, mu) if mu > mv else (v, mv)
        sign = 1 if (k - m + 1) % 2 == 0 else -1
        f = sign * int(dots[tree.index_of(deeper)])
        values[(u, v)] = f
        edge_layer[(u, v)] = m
        vector[e] = f
    vector.setflags(write=False)
    return ForcedLabeling(values, frozenset(values.values()), edge_layer, vector)


def sigma(lt: LayeredTree) -> int:
    """The center invariant: any magic labeling's pendant label x satisfies
    sigma * x == 0 (mod h).

    Even diameter: alternating sum of layer sizes from layer k down to 0.
    Odd diameter: alternating sum of the differences between the two center
    vertices' branch layer counts.
    """
    if lt.tree.n_edges == 0:
        raise DegenerateTreeError("single-vertex tree has no center invariant")
    k = lt.k
    if not lt.center.is_odd:
        total = 0
        for i in range(1, k + 2):
            term = lt.layer_sizes.get(k - i + 1, 0)
            total += term if (k + i) % 2 == 0 else -term
        return total
    i1 = lt.tree.index_of(lt.center.c1)
    i2 = lt.tree.index_of(lt.center.c2)
    total = 0
    for i in range(1, k + 1):
        diff = int(lt.counts[i1, k - i + 1]) - int(lt.counts[i2, k - i + 1])
        total += diff if i % 2 == 0 else -diff
    return total


def divides_some(m: int, values: Iterable[int]) -> bool:
    """Whether m divides at least one of the values.

    Conventions: every m divides 0; 0 divides only 0; signs are ignored.
    """
    m = abs(m)
    for r in values:
        if r == 0:
            return True
        if m != 0 and abs(r) % m == 0:
            return True
    return False


def _positive_divisors(x: int) -> list[int]:
    x = abs(x)
    small, large = [], []
    for d in range(1, math.isqrt(x) + 1):
        if x % d == 0:
            small.append(d)
            if d * d != x:
                large.append(x // d)
    return small + large[::-1]


@dataclass(frozen=True)
class SpectrumDescription:
    """Closed form of the set of moduli h for which the tree is h-magic.

    kind "empty": no modulus works. kind "co_divisors": every h >= 2 dividing
    no forced factor works (sigma is 0). kind "union_of_multiples": exactly
    the multiples of the generators work. kind "trivially_magic": the
    single-vertex tree, magic for every modulus via the empty labeling.
    Membership is closed under positive multiples in every case.
    """

    kind: str
    sigma: int | None
    range_f: frozenset[int] | None
    generators: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (EMPTY, CO_DIVISORS, UNION_OF_MULTIPLES, TRIVIALLY_MAGIC):
            raise ValueError(f"unknown spectrum kind {self.kind!r}")
        if self.kind == UNION_OF_MULTIPLES:
            if not self.generators or any(d < 2 for d in self.generators):
                raise InternalError("multiple-generators must be a nonempty set of integers >= 2")

    def contains(self, h: int) -> bool:
        """Whether modulus h admits a magic labeling."""
        if h < 1:
            raise ValueError(f"modulus must be positive, got {h}")
        if self.kind == TRIVIALLY_MAGIC:
            return True
        if self.kind == EMPTY:
            return False
        if self.kind == CO_DIVISORS:
            return h >= 2 and not divides_some(h, self.range_f)
        return any(h % d == 0 for d in self.generators)

    def to_json_dict(self) -> dict:
        if self.kind == CO_DIVISORS:
            return {
                "kind": self.kind,
                "range_f": sorted(self.range_f),
                "sigma": self.sigma,
            }
        if self.kind == UNION_OF_MULTIPLES:
            return {
                "kind": self.kind,
                "generators": list(self.generators),
                "sigma": self.sigma,
            }
        return {"kind": self.kind}

    def render(self) -> str:
        """Human-readable set notation."""
        if self.kind == TRIVIALLY_MAGIC:
            return "IM = trivially magic (single vertex; every modulus works)"
        if self.kind == EMPTY:
            return "IM = ∅"
        if self.kind == CO_DIVISORS:
            excluded: set[int] = set()
            for r in self.range_f:
                excluded.update(_positive_divisors(r))
            body = ",".join(str(d) for d in sorted(excluded))
            return f"IM = N \\ {{{body}}}"
        gens = sorted(self.generators)
        first = sorted({d * t for d in gens for t in (1, 2, 3)})[:3]
        body = ",".join(str(m) for m in first)
        union = " ∪ ".join(f"{d}N" for d in gens)
        return f"IM = {union} = {{{body},...}}"


def spectrum_contains(desc: SpectrumDescription, h: int) -> bool:
    return desc.contains(h)


def spectrum(lt: LayeredTree, fl: ForcedLabeling | None = None) -> SpectrumDescription:
    """Evaluate the closed-form spectrum.

    Case order matters: a sigma dividing some forced factor gives the empty
    spectrum even when sigma is 0 (0 divides 0, so a zero forced factor
    forces emptiness before the co-divisor case is reached).
    """
    if fl is None:
        fl = forced_labeling(lt)
    s = sigma(lt)
    if divides_some(s, fl.range_f):
        return SpectrumDescription(EMPTY, s, fl.range_f)
    if s == 0:
        return SpectrumDescription(CO_DIVISORS, 0, fl.range_f)
    gens = tuple(
        d for d in _positive_divisors(s) if d >= 2 and not divides_some(d, fl.range_f)
    )
    # abs(s) itself always qualifies here, so gens is never empty
    return SpectrumDescription(UNION_OF_MULTIPLES, s, fl.range_f, gens)


def describe_spectrum(tree: Tree) -> SpectrumDescription:
    """Spectrum of any tree, mapping the single vertex to the trivial marker."""
    if tree.n_edges == 0:
        return SpectrumDescription(TRIVIALLY_MAGIC, None, None)
    return spectrum(layered_tree(tree))


def find_witness(lt: LayeredTree, fl: ForcedLabeling, h: int) -> int | None:
    """Smallest pendant label x in 1..h-1 certifying an h-magic labeling.

    x must keep x*f(e) nonzero mod h on every edge and satisfy
    sigma*x == 0 mod h. Returns None when no such x exists; by the spectrum
    characterization that happens exactly when h is outside the spectrum.
    """
    if h < 2:
        raise ValueError(f"modulus must be at least 2, got {h}")
    x = int(_kernels.witness_scan(fl.vector, sigma(lt), h))
    return x if x else None


def witness_table(lt: LayeredTree, fl: ForcedLabeling, h_max: int) -> dict[int, int | None]:
    """find_witness for every modulus 2..h_max in one kernel call."""
    if h_max < 2:
        return {}
    out = np.zeros(h_max + 1, dtype=np.int64)
    _kernels.witness_scan_all(fl.vector, sigma(lt), h_max, out)
    return {h: (int(out[h]) if out[h] else None) for h in range(2, h_max + 1)}


def construct_labeling(lt: LayeredTree, fl: ForcedLabeling, h: int) -> MagicLabeling:
    """Build the explicit h-magic labeling l(e) = x * f(e) mod h.

    Raises NotInSpectrumError when h is outside the spectrum, and
    InternalError if the witness scan fails for a member h (cannot happen on
    a correct implementation).
    """
    desc = spectrum(lt, fl)
    if not desc.contains(h):
        raise NotInSpectrumError(f"h = {h} is not in the spectrum ({desc.render()})")
    x = find_witness(lt, fl, h)
    if x is None:
        raise InternalError(f"membership holds for h = {h} but no witness was found")
    labels = {edge: (x * f) % h for edge, f in fl.values.items()}
    return MagicLabeling(modulus=h, labels=labels, pendant_label=x)


def follows_forced_pattern(
    lt: LayeredTree, fl: ForcedLabeling, labeling: MagicLabeling
) -> tuple[bool, str | None]:
    """Conformance check for an externally found magic labeling.

    Reads the pendant label x off the first pendant edge, then requires
    l(e) == x*f(e) mod h on every edge and sigma*x == 0 mod h.
    """
    tree = lt.tree
    h = labeling.modulus
    pend = tree.pendant_edges()
    if not pend:
        return False, "tree has no pendant edge"
    x = labeling.labels[pend[0]]
    for edge in tree.edges:
        expected = (x * fl.values[edge]) % h
        got = labeling.labels[edge] % h
        if got != expected:
            return False, f"edge {edge!r}: label {got} differs from x*f = {expected} (mod {h})"
    if (sigma(lt) * x) % h != 0:
        return False, f"sigma * x = {sigma(lt)} * {x} is nonzero mod {h}"
    return True, None
