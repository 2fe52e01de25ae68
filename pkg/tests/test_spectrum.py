import math

import pytest
from hypothesis import given, settings

import treemagic as tm
from helpers import (
    bruteforce_reference,
    double_star,
    forced_reference,
    path_tree,
    seeded_random_trees,
    sigma_reference,
    spectrum_set,
    star_tree,
    trees,
)


def layered(t):
    return tm.layered_tree(t)


# ---------------------------------------------------------------- forced factors


def test_pendant_edges_forced_to_one():
    for t in (path_tree(5), star_tree(4), double_star(3, 3), path_tree(2)):
        lt = layered(t)
        fl = tm.forced_labeling(lt)
        for u, v in t.pendant_edges():
            assert fl.values[(u, v)] == 1


def test_forced_value_path5_middle_edge():
    t = path_tree(5)
    fl = tm.forced_labeling(layered(t))
    assert fl.values[t.edge_key("v1", "v2")] == 0
    assert fl.values[t.edge_key("v2", "v3")] == 0
    assert sorted(fl.range_f) == [0, 1]


def test_forced_value_double_star_center_edge():
    t = double_star(3, 3)
    fl = tm.forced_labeling(layered(t))
    assert fl.values[t.edge_key("p", "q")] == -2
    assert sorted(fl.range_f) == [-2, 1]


def test_edge_layer_assignment():
    t = path_tree(4)  # odd diameter; center edge gets layer 0
    fl = tm.forced_labeling(layered(t))
    assert fl.edge_layer[t.edge_key("v1", "v2")] == 0
    assert fl.edge_layer[t.edge_key("v0", "v1")] == 1


def test_forced_labeling_degenerate():
    with pytest.raises(tm.DegenerateTreeError):
        tm.forced_labeling(layered(tm.parse_tree("x\n")))


@settings(max_examples=80)
@given(trees(min_n=2, max_n=14))
def test_forced_matches_literal_reference(t):
    lt = layered(t)
    fl = tm.forced_labeling(lt)
    assert fl.values == forced_reference(lt)
    assert fl.range_f == frozenset(fl.values.values())
    assert list(fl.vector) == [fl.values[e] for e in t.edges]


@settings(max_examples=80)
@given(trees(min_n=2, max_n=20))
def test_forced_and_sigma_bounded_by_vertex_count(t):
    lt = layered(t)
    fl = tm.forced_labeling(lt)
    assert all(abs(f) <= t.n_vertices for f in fl.range_f)
    assert abs(tm.sigma(lt)) <= t.n_vertices


# ---------------------------------------------------------------------- sigma


def test_sigma_star_family():
    for n in range(2, 11):
        assert tm.sigma(layered(star_tree(n))) == n - 1


def test_sigma_path4_symmetric_zero():
    assert tm.sigma(layered(path_tree(4))) == 0


def test_sigma_path5():
    assert tm.sigma(layered(path_tree(5))) == -1


def test_sigma_degenerate():
    with pytest.raises(tm.DegenerateTreeError):
        tm.sigma(layered(tm.parse_tree("x\n")))


@settings(max_examples=80)
@given(trees(min_n=2, max_n=14))
def test_sigma_matches_reference(t):
    lt = layered(t)
    assert tm.sigma(lt) == sigma_reference(lt)


# ---------------------------------------------------------------- divisibility


@pytest.mark.parametrize(
    "m,values,expected",
    [
        (1, {1}, True),
        (5, {1, -2}, False),
        (7, {0, 1}, True),
        (0, {0, 3}, True),
        (0, {1, 3}, False),
        (-3, {6}, True),
        (3, {-6}, True),
        (4, {2, 6}, False),
    ],
)
def test_divides_some(m, values, expected):
    assert tm.divides_some(m, values) is expected


# -------------------------------------------------------------------- spectrum


def test_spectrum_star4_union_of_multiples():
    desc = tm.spectrum(layered(star_tree(4)))
    assert desc.kind == tm.UNION_OF_MULTIPLES
    assert desc.generators == (3,)
    assert desc.sigma == 3
    # confirmed exhaustively: members below 10 are exactly 3, 6, 9
    star = star_tree(4)
    oracle_members = {
        h for h in range(2, 10) if tm.is_h_magic_bruteforce(star, h).is_magic
    }
    assert oracle_members == {3, 6, 9}
    assert spectrum_set(star, 9) == {3, 6, 9}


@pytest.mark.parametrize("n", range(3, 8))
def test_spectrum_paths_empty(n):
    desc = tm.spectrum(layered(path_tree(n)))
    assert desc.kind == tm.EMPTY
    for h in range(2, 7):
        assert not tm.is_h_magic_bruteforce(path_tree(n), h).is_magic


def test_spectrum_double_star_co_divisors():
    t = double_star(3, 3)
    desc = tm.spectrum(layered(t))
    assert desc.kind == tm.CO_DIVISORS
    assert desc.sigma == 0
    assert desc.range_f == frozenset({1, -2})
    assert not tm.is_h_magic_bruteforce(t, 2).is_magic
    for h in (3, 4, 5):
        assert tm.is_h_magic_bruteforce(t, h).is_magic


def test_spectrum_case_order_zero_sigma_with_zero_factor():
    # sigma is 0 AND 0 is a forced factor; emptiness must win
    lt = layered(path_tree(4))
    assert tm.sigma(lt) == 0
    assert 0 in tm.forced_labeling(lt).range_f
    assert tm.spectrum(lt).kind == tm.EMPTY


def test_spectrum_single_edge_all_moduli():
    desc = tm.spectrum(layered(path_tree(2)))
    assert desc.kind == tm.CO_DIVISORS
    assert all(desc.contains(h) for h in range(2, 30))
    assert not desc.contains(1)


def test_describe_spectrum_single_vertex():
    desc = tm.describe_spectrum(tm.parse_tree("x\n"))
    assert desc.kind == tm.TRIVIALLY_MAGIC
    assert desc.contains(1) and desc.contains(2) and desc.contains(97)


def test_spectrum_contains_examples():
    union = tm.SpectrumDescription(tm.UNION_OF_MULTIPLES, 3, frozenset({1}), (3,))
    assert tm.spectrum_contains(union, 6)
    codiv = tm.SpectrumDescription(tm.CO_DIVISORS, 0, frozenset({1, -2}))
    assert not tm.spectrum_contains(codiv, 2)
    empty = tm.SpectrumDescription(tm.EMPTY, 1, frozenset({1}))
    assert not tm.spectrum_contains(empty, 17)
    with pytest.raises(ValueError):
        union.contains(0)


def test_spectrum_membership_closed_under_multiples():
    for _, t in seeded_random_trees(40, 2, 16, master_seed=5):
        desc = tm.describe_spectrum(t)
        for h in range(2, 20):
            if desc.contains(h):
                for mult in range(1, 6):
                    assert desc.contains(mult * h)


def test_serialization_schemas():
    star = tm.spectrum(layered(star_tree(4)))
    assert star.to_json_dict() == {
        "kind": "union_of_multiples",
        "generators": [3],
        "sigma": 3,
    }
    ds = tm.spectrum(layered(double_star(3, 3)))
    assert ds.to_json_dict() == {
        "kind": "co_divisors",
        "range_f": [-2, 1],
        "sigma": 0,
    }
    assert tm.spectrum(layered(path_tree(4))).to_json_dict() == {"kind": "empty"}
    assert tm.describe_spectrum(tm.parse_tree("x\n")).to_json_dict() == {
        "kind": "trivially_magic"
    }


def test_render_strings():
    assert tm.spectrum(layered(star_tree(4))).render() == "IM = 3N = {3,6,9,...}"
    assert tm.spectrum(layered(path_tree(5))).render() == "IM = ∅"
    assert tm.spectrum(layered(double_star(3, 3))).render() == "IM = N \\ {1,2}"
    assert "trivially magic" in tm.describe_spectrum(tm.parse_tree("x\n")).render()


# -------------------------------------------------------------------- witnesses


def test_witness_star4():
    lt = layered(star_tree(4))
    fl = tm.forced_labeling(lt)
    assert tm.find_witness(lt, fl, 3) == 1
    assert tm.find_witness(lt, fl, 2) is None
    assert tm.find_witness(lt, fl, 6) == 2


def test_witness_path3_never_exists():
    lt = layered(path_tree(3))
    fl = tm.forced_labeling(lt)
    for h in range(2, 9):
        assert tm.find_witness(lt, fl, h) is None


def test_witness_rejects_h_below_two():
    lt = layered(path_tree(3))
    fl = tm.forced_labeling(lt)
    with pytest.raises(ValueError):
        tm.find_witness(lt, fl, 1)


def test_witness_table_matches_single_scans():
    for _, t in seeded_random_trees(25, 2, 14, master_seed=11):
        lt = layered(t)
        fl = tm.forced_labeling(lt)
        table = tm.witness_table(lt, fl, 15)
        assert set(table) == set(range(2, 16))
        for h in range(2, 16):
            assert table[h] == tm.find_witness(lt, fl, h)


def test_witness_iff_membership_small_sweep():
    for n in range(2, 6):
        for t in tm.all_labeled_trees(n):
            lt = layered(t)
            fl = tm.forced_labeling(lt)
            desc = tm.spectrum(lt, fl)
            for h in range(2, 11):
                assert (tm.find_witness(lt, fl, h) is not None) == desc.contains(h)


def test_gcd_quotient_is_also_a_witness():
    # whenever h is a member, h // gcd(|sigma|, h) must satisfy both witness
    # properties (it need not be the smallest)
    for _, t in seeded_random_trees(30, 2, 16, master_seed=13):
        lt = layered(t)
        fl = tm.forced_labeling(lt)
        desc = tm.spectrum(lt, fl)
        s = tm.sigma(lt)
        for h in range(2, 25):
            if not desc.contains(h):
                continue
            x = h // math.gcd(abs(s), h)
            assert x % h != 0
            assert (s * x) % h == 0
            assert all((x * f) % h != 0 for f in fl.values.values())


# ----------------------------------------------------------------- construction


def test_construct_star4_h3():
    t = star_tree(4)
    lt = layered(t)
    lab = tm.construct_labeling(lt, tm.forced_labeling(lt), 3)
    assert lab.pendant_label == 1
    assert set(lab.labels.values()) == {1}
    res = tm.verify_labeling(t, lab)
    assert res.ok and res.constant == 1


def test_construct_double_star_h3():
    t = double_star(3, 3)
    lt = layered(t)
    lab = tm.construct_labeling(lt, tm.forced_labeling(lt), 3)
    assert lab.pendant_label == 1
    assert lab.labels[t.edge_key("p", "q")] == 1  # -2 reduced mod 3
    assert tm.verify_labeling(t, lab).ok


def test_construct_not_in_spectrum():
    t = path_tree(5)
    lt = layered(t)
    with pytest.raises(tm.NotInSpectrumError):
        tm.construct_labeling(lt, tm.forced_labeling(lt), 4)


def test_construct_sweep_verifies_and_hits_pendant_constant():
    for _, t in seeded_random_trees(30, 2, 18, master_seed=17):
        lt = layered(t)
        fl = tm.forced_labeling(lt)
        desc = tm.spectrum(lt, fl)
        for h in range(2, 26):
            if not desc.contains(h):
                continue
            lab = tm.construct_labeling(lt, fl, h)
            assert all(1 <= v <= h - 1 for v in lab.labels.values())
            res = tm.verify_labeling(t, lab)
            assert res.ok
            # the common vertex sum is the pendant label itself
            assert res.constant == lab.pendant_label % h


def test_oracle_labelings_follow_forced_pattern():
    t = double_star(3, 3)
    lt = layered(t)
    fl = tm.forced_labeling(lt)
    labelings = tm.enumerate_magic_labelings(t, 3)
    assert len(labelings) == len(bruteforce_reference(t, 3))
    for lab in labelings:
        ok, why = tm.follows_forced_pattern(lt, fl, lab)
        assert ok, why
