import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treedim.dimension import mtd_ell, td
from treedim.normalization import lex_order, normalize_binary, normalize_mary, reverse_lex_order
from treedim.tree_core import LeafSet, set_norm


def test_small_example():
    B = LeafSet.from_strings(["01", "10"])
    final, trace = normalize_binary(B)
    assert final == LeafSet.from_strings(["00", "10"])
    assert trace.final_norm == 1 == td(B)
    assert trace.replay() == final


def test_orders():
    assert lex_order(2, 2) == [(0,), (1,), ()]
    assert reverse_lex_order(2, 2) == [(1,), (0,), ()]
    assert lex_order(3, 0) == []


def test_fig1(fig1):
    final, trace = normalize_binary(fig1)
    assert len(final) == 4
    assert set_norm(final.leaves, 2) == td(fig1) == 2


def test_mary_on_the_ternary_example(fig3):
    for ell in (2, 3):
        final, trace = normalize_mary(fig3, ell)
        assert len(final) == len(fig3)
        assert set_norm(final.leaves, ell) == mtd_ell(fig3, ell)
        assert trace.replay() == final


def test_validation(fig1, fig3):
    with pytest.raises(ValueError):
        normalize_binary(fig3)
    with pytest.raises(ValueError):
        normalize_mary(fig3, 4)


def test_empty_set():
    final, trace = normalize_binary(LeafSet(2, 3))
    assert final.leaves == frozenset() and trace.swaps == ()
    assert trace.final_norm == -1


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_binary_exhaustive(n):
    for mask in range(1 << (1 << n)):
        B = LeafSet.from_mask(mask, n)
        want = td(B)
        for order in (lex_order, reverse_lex_order):
            final, trace = normalize_binary(B, order)
            assert set_norm(final.leaves, 2) == want
            assert len(final) == len(B)
            assert trace.replay() == final
        final, _ = normalize_mary(B, 2)
        assert set_norm(final.leaves, 2) == want
        # a normalized set stays at the same norm
        again, _ = normalize_binary(final)
        assert set_norm(again.leaves, 2) == want


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.sampled_from([2, 3]), st.randoms(use_true_random=False))
def test_ternary_random(n, ell, rnd):
    idx = [v for v in range(3**n) if rnd.random() < rnd.random()]
    B = LeafSet.from_indices(idx, 3, n)
    final, trace = normalize_mary(B, ell)
    assert len(final) == len(B)
    assert trace.replay() == final
    assert set_norm(final.leaves, ell) == mtd_ell(B, ell)
    rev, _ = normalize_mary(B, ell, reverse_lex_order)
    assert set_norm(rev.leaves, ell) == set_norm(final.leaves, ell)


def test_binary_random_height_six():
    rng = random.Random(11)
    for _ in range(200):
        B = LeafSet.from_indices([v for v in range(64) if rng.random() < 0.3], 2, 6)
        final, _ = normalize_binary(B)
        assert set_norm(final.leaves, 2) == td(B)
