import pytest
from hypothesis import given, settings

import networkx as nx

import treemagic as tm
from helpers import codes


def edge_index_set(tree):
    return {frozenset((tree.index_of(u), tree.index_of(v))) for u, v in tree.edges}


def test_single_vertex_and_single_edge():
    t1 = tm.random_tree(1, seed=0)
    assert t1.n_vertices == 1 and t1.n_edges == 0
    t2 = tm.random_tree(2, seed=0)
    assert t2.n_vertices == 2 and t2.edges == (("0", "1"),)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)])
def test_cayley_counts(n, count):
    seen = set()
    total = 0
    for t in tm.all_labeled_trees(n):
        total += 1
        seen.add(frozenset(edge_index_set(t)))
    assert total == count
    assert len(seen) == count  # no duplicates


def test_exhaustive_guard():
    with pytest.raises(tm.NTooLargeError):
        list(tm.all_labeled_trees(9))
    with pytest.raises(ValueError):
        list(tm.all_labeled_trees(0))


def test_random_tree_deterministic_per_seed():
    a = tm.random_tree(12, seed=991)
    b = tm.random_tree(12, seed=991)
    assert a.edges == b.edges
    c = tm.random_tree(12, seed=992)
    assert a.edges != c.edges  # overwhelmingly likely for distinct seeds


def test_decode_matches_networkx_fixed_code():
    code = (0, 0, 1)
    mine = tm.tree_from_code(code)
    ref = nx.from_prufer_sequence(list(code))
    assert edge_index_set(mine) == {frozenset(e) for e in ref.edges()}


@settings(max_examples=120)
@given(codes(min_n=3, max_n=10))
def test_decode_matches_networkx(code):
    mine = tm.tree_from_code(code)
    ref = nx.from_prufer_sequence(list(code))
    assert edge_index_set(mine) == {frozenset(e) for e in ref.edges()}


@settings(max_examples=120)
@given(codes(min_n=3, max_n=12))
def test_encode_inverts_decode(code):
    assert tm.code_from_tree(tm.tree_from_code(code)) == tuple(code)


def test_decode_validates_input():
    with pytest.raises(ValueError):
        tm.tree_from_code((5,), n=3)  # index out of range
    with pytest.raises(ValueError):
        tm.tree_from_code((0,), n=1)
    with pytest.raises(ValueError):
        tm.tree_from_code((0, 1), n=3)  # wrong length


def test_generated_trees_are_valid():
    for seed in range(20):
        t = tm.random_tree(15, seed=seed)
        assert t.n_edges == 14  # Tree construction already validated the rest
