import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twocayley.digraph import (AbelianGroup2, CayleyDigraph2, DegenerateDigraphError,
                               NotGeneratingError, OrderTooLargeError, bfs_distances,
                               canonical_groups, canonicalize_group, congruence_mdds, diameter,
                               find_mdds, formula_diameter, generates, is_mdd_for, parse_digraph)
from twocayley.lshape import LShape, enumerate_lshapes

from oracles import naive_diameter


def test_group_basics():
    g = AbelianGroup2(2, 6)
    assert g.order == 12 and not g.is_cyclic
    assert g.reduce((-1, 7)) == (1, 1)
    assert g.element(g.index((1, 4))) == (1, 4)
    assert g.element_order((1, 2)) == 6
    with pytest.raises(ValueError):
        AbelianGroup2(4, 6)


def test_canonicalize():
    group, convert = canonicalize_group(6, 4)
    assert (group.s1, group.s2) == (2, 12)
    images = {convert((x, y)) for x in range(6) for y in range(4)}
    assert len(images) == 24


def test_canonical_groups():
    assert [(g.s1, g.s2) for g in canonical_groups(72)] == [(1, 72), (2, 36), (3, 24), (6, 12)]


def test_degenerate_digraphs():
    with pytest.raises(DegenerateDigraphError):
        CayleyDigraph2.cyclic(8, 0, 3)
    with pytest.raises(DegenerateDigraphError):
        CayleyDigraph2.cyclic(8, 3, 11)


def test_example_one():
    d = CayleyDigraph2.cyclic(16, 2, 5)
    assert diameter(d) == 5
    assert find_mdds(d) == [LShape(5, 4, 2, 2)]


def test_example_two():
    d = parse_digraph("4,12;0,1;3,2")
    assert diameter(d) == 10
    assert LShape(8, 8, 4, 4) in find_mdds(d)


def test_not_generating():
    d = CayleyDigraph2.cyclic(12, 2, 4)
    assert not d.generates()
    with pytest.raises(NotGeneratingError):
        diameter(d)
    with pytest.raises(NotGeneratingError):
        formula_diameter(d, 10)


def test_bfs_cap():
    d = CayleyDigraph2.cyclic(5000, 1, 70)
    with pytest.raises(OrderTooLargeError):
        bfs_distances(d, max_order=1000)


group_and_pair = st.integers(1, 6).flatmap(
    lambda s1: st.integers(1, 8).flatmap(
        lambda k: st.tuples(st.just(s1), st.just(s1 * k),
                            st.tuples(st.integers(0, s1 - 1), st.integers(0, s1 * k - 1)),
                            st.tuples(st.integers(0, s1 - 1), st.integers(0, s1 * k - 1)))))


@settings(max_examples=300)
@given(group_and_pair)
def test_bfs_and_generation_against_naive(case):
    s1, s2, a, b = case
    group = AbelianGroup2(s1, s2)
    try:
        d = CayleyDigraph2(group, a, b)
    except DegenerateDigraphError:
        return
    expected = naive_diameter(s1, s2, a, b)
    assert generates(group, a, b) == (expected is not None)
    if expected is None:
        with pytest.raises(NotGeneratingError):
            bfs_distances(d)
    else:
        dist = bfs_distances(d)
        assert dist.dtype == np.int32
        assert int(dist.max()) == expected


@pytest.mark.parametrize("text", ["16;2;5", "4,12;0,1;3,2", "27;1;5", "2,10;1,1;0,3", "3,9;1,0;1,4"])
def test_congruence_route_matches_filtering(text):
    d = parse_digraph(text)
    D = diameter(d)
    for bound in (D - 1, D, D + 3):
        expected = [L for L in enumerate_lshapes(d.order, bound) if is_mdd_for(L, d)]
        assert congruence_mdds(d, bound) == expected
    assert formula_diameter(d, D - 1) is None
    assert formula_diameter(d, D)[0] == D


def test_parse_errors():
    for bad in ("16;2", "a;b;c", "4,12;0;1", ""):
        with pytest.raises(ValueError):
            parse_digraph(bad)
    assert parse_digraph("2,6;-1,-1;0,1").a == (1, 5)
