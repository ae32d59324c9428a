import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treedim.oracle import (
    EmbeddingError,
    EmbeddingKind,
    EmbeddingWitness,
    brute_dimension,
    embed_exists,
    is_embedding,
    pattern_nodes,
)
from treedim.tree_core import LeafSet, all_nodes, branch_closure, parse_node, swap_set

PLAIN, MEETED, LEVELED = EmbeddingKind.PLAIN, EmbeddingKind.MEETED, EmbeddingKind.LEVELED
FIG1 = LeafSet.from_strings(["000", "010", "100", "101"])


def witness(d, pairs, ell=2):
    return EmbeddingWitness(d, ell, tuple((parse_node(p), parse_node(t)) for p, t in pairs))


def test_pattern_nodes_bfs():
    assert pattern_nodes(2, 2) == tuple(parse_node(s) for s in ["", "0", "1", "00", "01", "10", "11"])
    assert len(pattern_nodes(3, 3)) == 1 + 3 + 9 + 27


def test_is_embedding_examples():
    target = branch_closure(LeafSet.from_strings(["00", "10"]))
    assert is_embedding(witness(1, [("", ""), ("0", "00"), ("1", "10")]), PLAIN, target)
    # 0 precedes 00 in the target but the pattern children are incomparable
    assert not is_embedding(witness(1, [("", ""), ("0", "0"), ("1", "00")]), PLAIN, target)


def test_is_embedding_level_condition():
    target = branch_closure(LeafSet.from_strings(["000", "100"]))
    w = witness(1, [("", ""), ("0", "00"), ("1", "100")])
    assert is_embedding(w, PLAIN, target)
    assert is_embedding(w, MEETED, target)
    assert not is_embedding(w, LEVELED, target)


def test_is_embedding_meet_condition():
    # children sit under the same child of the root image, so their meet is not the root image
    target = branch_closure(LeafSet.from_strings(["000", "010"]))
    w = witness(1, [("", ""), ("0", "00"), ("1", "01")])
    assert is_embedding(w, PLAIN, target)
    assert not is_embedding(w, MEETED, target)


def test_is_embedding_rejects_non_injective_and_bad_images():
    target = branch_closure(LeafSet.from_strings(["00", "10"]))
    assert not is_embedding(witness(1, [("", ""), ("0", "00"), ("1", "00")]), PLAIN, target)
    with pytest.raises(EmbeddingError):
        is_embedding(witness(1, [("", ""), ("0", "00"), ("1", "11")]), PLAIN, target)
    with pytest.raises(EmbeddingError):
        is_embedding(witness(1, [("", ""), ("0", "00")]), PLAIN, target)


def test_embed_exists_examples():
    trie = branch_closure(FIG1)
    w = embed_exists(2, 2, PLAIN, trie)
    assert w is not None and is_embedding(w, PLAIN, trie)
    assert embed_exists(2, 2, LEVELED, trie) is None
    for kind in EmbeddingKind:
        w = embed_exists(0, 2, kind, trie)
        assert w is not None and len(w.mapping) == 1
    with pytest.raises(ValueError):
        embed_exists(1, 3, PLAIN, trie)
    with pytest.raises(ValueError):
        embed_exists(-1, 2, PLAIN, trie)


def test_brute_dimension_examples():
    assert brute_dimension(FIG1, 2, LEVELED) == 1
    assert brute_dimension(FIG1, 2, PLAIN) == 2
    for kind in EmbeddingKind:
        assert brute_dimension(LeafSet(2, 3), 2, kind) == -1
        assert brute_dimension(LeafSet.full(2, 3), 2, kind) == 3
        assert brute_dimension(LeafSet.from_strings(["0110"]), 2, kind) == 0


@st.composite
def small_leafsets(draw):
    m = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(1, 4 if m == 2 else 3))
    leaves = draw(st.sets(st.tuples(*[st.integers(0, m - 1)] * n), min_size=1, max_size=m**n))
    return LeafSet(m, n, frozenset(leaves))


@settings(max_examples=120, deadline=None)
@given(small_leafsets(), st.data())
def test_oracle_invariants(B, data):
    ell = data.draw(st.integers(2, B.m))
    trie = branch_closure(B)
    dims = {}
    for kind in EmbeddingKind:
        d = brute_dimension(B, ell, kind)
        dims[kind] = d
        assert 0 <= d <= B.n
        w = embed_exists(d, ell, kind, trie)
        assert w is not None and is_embedding(w, kind, trie)
        # monotone in d
        for smaller in range(d):
            assert embed_exists(smaller, ell, kind, trie) is not None
        assert embed_exists(d + 1, ell, kind, trie) is None
    assert dims[LEVELED] <= dims[MEETED] <= dims[PLAIN]
    if ell == 2:
        assert dims[MEETED] == dims[PLAIN]


@settings(max_examples=60, deadline=None)
@given(small_leafsets(), st.randoms(use_true_random=False))
def test_oracle_invariant_under_swaps(B, rnd):
    internal = list(all_nodes(B.m, B.n - 1))
    image = B
    for _ in range(rnd.randrange(1, 6)):
        image = swap_set(image, rnd.choice(internal), rnd.randrange(B.m - 1))
    for ell in range(2, B.m + 1):
        for kind in EmbeddingKind:
            assert brute_dimension(image, ell, kind) == brute_dimension(B, ell, kind)


def test_witnesses_are_deterministic():
    rng = random.Random(5)
    for _ in range(20):
        B = LeafSet.from_indices([v for v in range(16) if rng.random() < 0.5] or [0], 2, 4)
        trie = branch_closure(B)
        for kind in EmbeddingKind:
            d = brute_dimension(B, 2, kind)
            assert embed_exists(d, 2, kind, trie) == embed_exists(d, 2, kind, trie)
