import json

import pytest

from thompson.t3 import leaf_counts_congruent, leaf_parity_report, search_torsion
from thompson.treepair import TreePair, enumerate_elements, generator, order


def test_no_ternary_involution():
    assert search_torsion(3, 2, 7) == []


def test_binary_involution_is_f12():
    assert search_torsion(2, 2, 2) == [generator("f12")]


def test_f_is_torsion_free_at_small_scale():
    assert [tp for tp in search_torsion(2, 2, 4) if tp.rotation == 1] == []


@pytest.mark.parametrize("n", range(5))
def test_finds_cn(n):
    assert generator(f"c{n}") in search_torsion(2, n + 2, n + 2)


def test_orders_are_exact():
    for k in (2, 3, 4, 6):
        for tp in search_torsion(2, k, 5):
            assert order(tp, k) == k
            assert all(order(tp, d) is None for d in range(1, k) if k % d == 0 and d < k)


def test_ternary_torsion_exists():
    # rotations of a single ternary caret have order 3
    hits = search_torsion(3, 3, 3)
    assert hits and all(tp.leaf_count == 3 for tp in hits)


def test_bad_arguments():
    with pytest.raises(ValueError):
        search_torsion(1, 2, 3)
    with pytest.raises(ValueError):
        search_torsion(2, 1, 3)


def test_leaf_counts():
    for a in (2, 3, 4):
        assert leaf_counts_congruent(a, 7)


def test_parity_report_identity():
    assert leaf_parity_report(TreePair.identity(3), 1).counts == (0, 1, 0, 1)


def test_parity_report_rotated_caret():
    tp = TreePair.parse("(()()()) ; (()()()) ; 2")
    r1 = leaf_parity_report(tp, 1)
    r2 = leaf_parity_report(tp, 2)
    assert r1.counts == (0, 3, 0, 3) and r1.parities == (0, 1, 0, 1)
    assert r2.counts == (1, 2, 1, 2) and r2.alpha_is_range_breakpoint
    json.dumps(r2.to_json())


def test_parity_report_sums_are_odd():
    for tp in enumerate_elements(3, 7):
        for split in range(1, tp.leaf_count + 1):
            rep = leaf_parity_report(tp, split)
            assert (rep.r_minus + rep.r_plus) % 2 == 1
            assert (rep.s_minus + rep.s_plus) % 2 == 1


def test_parity_report_range_check():
    tp = TreePair.parse("(()()()) ; (()()()) ; 2")
    for bad in (0, 4):
        with pytest.raises(IndexError):
            leaf_parity_report(tp, bad)
