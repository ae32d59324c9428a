import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treedim.dimension import ltd, td
from treedim.learning import (
    Labeling,
    SetFamily,
    all_labelings,
    chi_labeling,
    chi_tuple,
    littlestone_by_labelings,
    littlestone_dim,
    shatters,
    traces,
    vc_dim,
)
from treedim.tree_core import LeafSet


def test_family_construction():
    F = SetFamily.from_sets("xyz", [{"x"}, {"x", "z"}, set()])
    assert len(F) == 3
    assert F.sets() == [frozenset(), frozenset("x"), frozenset("xz")]
    with pytest.raises(KeyError):
        SetFamily.from_sets("xy", [{"w"}])
    with pytest.raises(ValueError):
        SetFamily(("x", "x"), frozenset())
    with pytest.raises(ValueError):
        SetFamily(("x",), frozenset({2}))


def test_shatters_and_vc():
    F = SetFamily.from_sets("xyz", [set(), {"x"}, {"y"}, {"x", "y"}, {"z"}])
    assert shatters(F, "xy")
    assert not shatters(F, "xz")
    assert shatters(F, [])
    assert traces(F, "z") == {0, 4}
    assert vc_dim(F) == 2
    assert vc_dim(SetFamily.powerset("abcd")) == 4
    assert vc_dim(SetFamily(("a",), frozenset())) == -1
    assert vc_dim(SetFamily.from_sets("ab", [{"a"}])) == 0


def test_littlestone_examples():
    assert littlestone_dim(SetFamily.powerset("xy")) == 2
    assert littlestone_by_labelings(SetFamily.powerset("xy")) == 2
    # thresholds on a 4-point line: VC 1, LD 2
    line = SetFamily.from_sets("abcd", [set("abcd"[:i]) for i in range(5)])
    assert vc_dim(line) == 1
    assert littlestone_dim(line) == littlestone_by_labelings(line) == 2
    empty = SetFamily(("a",), frozenset())
    assert littlestone_dim(empty) == littlestone_by_labelings(empty) == -1


def test_chi_tuple():
    F = SetFamily.from_sets("xyz", [{"x"}, {"y", "z"}])
    assert chi_tuple(F, ["x", "y"]) == LeafSet.from_strings(["10", "01"])
    assert chi_tuple(F, ["z", "z", "x"]) == LeafSet.from_strings(["001", "110"])
    with pytest.raises(KeyError):
        chi_tuple(F, ["w"])


def test_chi_labeling():
    F = SetFamily.powerset("xy")
    alpha = Labeling.from_dict(2, {(): "x", (0,): "y", (1,): "y"})
    assert chi_labeling(F, alpha) == LeafSet.full(2, 2)
    beta = Labeling.from_dict(2, {(): "x", (0,): "x", (1,): "y"})
    assert chi_labeling(F, beta) == LeafSet.from_strings(["00", "10", "11"])
    with pytest.raises(ValueError):
        Labeling.from_dict(2, {(): "x"})


def test_all_labelings_count():
    assert sum(1 for _ in all_labelings("ab", 2)) == 2**3
    assert sum(1 for _ in all_labelings("abc", 0)) == 1


@st.composite
def families(draw, k_max=4):
    k = draw(st.integers(1, k_max))
    members = draw(st.sets(st.integers(0, (1 << k) - 1), max_size=6))
    return SetFamily(tuple("abcd"[:k]), frozenset(members))


@settings(max_examples=200, deadline=None)
@given(families(), st.data())
def test_tuple_images(F, data):
    d = vc_dim(F)
    points = data.draw(st.lists(st.sampled_from(F.universe), min_size=1, max_size=4))
    image = chi_tuple(F, points)
    assert td(image) <= len(set(points))
    if len(set(points)) == len(points):
        assert ltd(image) <= d
        assert (len(image) == 1 << len(points)) == shatters(F, points)
        if shatters(F, points):
            assert ltd(image) == len(points)


@settings(max_examples=100, deadline=None)
@given(families(k_max=3), st.integers(1, 3), st.data())
def test_labeling_images(F, n, data):
    labels = data.draw(st.lists(st.sampled_from(F.universe), min_size=2**n - 1, max_size=2**n - 1))
    nodes = [a for length in range(n) for a in itertools.product((0, 1), repeat=length)]
    image = chi_labeling(F, Labeling.from_dict(n, dict(zip(nodes, labels))))
    assert ltd(image) <= vc_dim(F)
    assert td(image) <= littlestone_dim(F)
    assert vc_dim(F) <= littlestone_dim(F)


def test_recursion_matches_definition_over_two_points():
    for members in range(1 << 4):
        F = SetFamily(("x", "y"), frozenset(G for G in range(4) if members >> G & 1))
        assert littlestone_dim(F) == littlestone_by_labelings(F)
